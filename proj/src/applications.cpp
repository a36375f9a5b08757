#include "weylchar/applications.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "json.hpp"
#include "weylchar/errors.hpp"

namespace weylchar {

using nlohmann::json;

Arrangement build_arrangement(Family f, int n) {
    Arrangement a;
    a.family = f;
    a.n = n;
    auto normal = [n](int i, int j, int ci, int cj) {
        std::vector<int> v(n, 0);
        v[i - 1] = ci;
        if (j) v[j - 1] = cj;
        return v;
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            a.normals.push_back(normal(i, j, 1, -1));
            if (f != Family::A) a.normals.push_back(normal(i, j, 1, 1));
        }
    }
    if (f == Family::BC)
        for (int i = 1; i <= n; ++i) a.normals.push_back(normal(i, 0, 1, 0));
    return a;
}

int pipeline_cap_n() {
    if (const char* env = std::getenv("WEYLCHAR_MAX_N")) {
        int v = std::atoi(env);
        if (v > 8) return v;
    }
    return 8;
}

namespace {

// --- shared degree-2 exterior quotient machinery ---------------------------

// Action of a group element on generators: index -> (sign, index), bijective.
using GenAction = std::function<std::pair<int, int>(int)>;

struct DegreeTwoQuotient {
    int num_gens = 0;
    std::vector<std::pair<int, int>> monomials;        // pairs (a < b)
    std::map<std::pair<int, int>, int> monomial_index;
    std::vector<int> pivots;                           // ascending
    std::vector<std::map<int, Rat>> rows;              // full RREF, sparse

    explicit DegreeTwoQuotient(int gens) : num_gens(gens) {
        for (int a = 0; a < gens; ++a)
            for (int b = a + 1; b < gens; ++b) {
                monomial_index[{a, b}] = static_cast<int>(monomials.size());
                monomials.emplace_back(a, b);
            }
    }

    int dim() const { return static_cast<int>(monomials.size() - rows.size()); }

    void reduce_relations(std::vector<std::map<int, Rat>> relations) {
        std::map<int, std::map<int, Rat>> echelon;  // pivot -> row
        for (auto& r : relations) {
            for (const auto& [p, prow] : echelon) {
                auto it = r.find(p);
                if (it == r.end() || it->second == 0) continue;
                Rat c = it->second;
                for (const auto& [j, v] : prow) {
                    Rat& x = r[j];
                    x -= c * v;
                    if (x == 0) r.erase(j);
                }
            }
            for (auto it = r.begin(); it != r.end();)
                it = (it->second == 0) ? r.erase(it) : std::next(it);
            if (r.empty()) continue;
            int p = r.begin()->first;
            Rat lead = r.begin()->second;
            for (auto& [j, v] : r) v /= lead;
            echelon.emplace(p, std::move(r));
        }
        // back-substitute to full RREF (descending pivots)
        for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
            auto& row = it->second;
            for (auto jt = std::next(echelon.find(it->first)); jt != echelon.end(); ++jt) {
                auto hit = row.find(jt->first);
                if (hit == row.end()) continue;
                Rat c = hit->second;
                for (const auto& [j, v] : jt->second) {
                    Rat& x = row[j];
                    x -= c * v;
                    if (x == 0) row.erase(j);
                }
            }
        }
        for (auto& [p, row] : echelon) {
            pivots.push_back(p);
            rows.push_back(std::move(row));
        }
    }

    // w-image of a monomial index: (coefficient, index)
    std::pair<int, int> monomial_image(const GenAction& act, int idx) const {
        auto [a, b] = monomials[idx];
        auto [sa, ia] = act(a);
        auto [sb, ib] = act(b);
        int sign = sa * sb;
        if (ia > ib) {
            std::swap(ia, ib);
            sign = -sign;
        }
        return {sign, monomial_index.at({ia, ib})};
    }

    // Trace of w on the quotient E^2 / I as Tr(E^2) - Tr(I).
    Rat trace(const GenAction& act, const GenAction& act_inv) const {
        long tr_e = 0;
        for (size_t idx = 0; idx < monomials.size(); ++idx) {
            auto [sign, image] = monomial_image(act, static_cast<int>(idx));
            if (image == static_cast<int>(idx)) tr_e += sign;
        }
        Rat tr_i = 0;
        for (size_t i = 0; i < rows.size(); ++i) {
            // coefficient of row_i in w.row_i is the pivot entry of w.row_i,
            // i.e. sign * row_i[w^{-1}(pivot_i)]
            auto [sign, pre] = monomial_image(act_inv, pivots[i]);
            auto it = rows[i].find(pre);
            if (it != rows[i].end()) tr_i += Rat(sign) * it->second;
        }
        return Rat(tr_e) - tr_i;
    }
};

// --- Orlik-Solomon pipeline -------------------------------------------------

std::vector<int> canonical_normal(std::vector<int> v) {
    for (int x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (int& y : v) y = -y;
            break;
        }
    }
    return v;
}

struct OsAction {
    const Arrangement* arr;
    std::map<std::vector<int>, int> normal_index;

    explicit OsAction(const Arrangement& a) : arr(&a) {
        for (int h = 0; h < a.num_hyperplanes(); ++h) normal_index[a.normals[h]] = h;
    }

    int image(const SignedPermutation& w, int h) const {
        std::vector<int> out(arr->n, 0);
        const std::vector<int>& v = arr->normals[h];
        for (int i = 1; i <= arr->n; ++i) {
            if (v[i - 1] == 0) continue;
            int wi = w.apply(i);
            out[std::abs(wi) - 1] += (wi > 0 ? 1 : -1) * v[i - 1];
        }
        return normal_index.at(canonical_normal(std::move(out)));
    }
};

int matrix_rank(std::vector<std::vector<Rat>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// In these arrangements two distinct hyperplanes are never dependent, so the
// degree-2 relation space is generated by boundaries of dependent triples.
std::vector<std::map<int, Rat>> os_degree2_relations(const Arrangement& a,
                                                     const DegreeTwoQuotient& q) {
    std::vector<std::map<int, Rat>> rels;
    const int h = a.num_hyperplanes();
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            for (int k = j + 1; k < h; ++k) {
                std::vector<std::vector<Rat>> m(3, std::vector<Rat>(a.n));
                for (int c = 0; c < a.n; ++c) {
                    m[0][c] = a.normals[i][c];
                    m[1][c] = a.normals[j][c];
                    m[2][c] = a.normals[k][c];
                }
                if (matrix_rank(std::move(m)) > 2) continue;
                // d(e_i e_j e_k) = e_j^e_k - e_i^e_k + e_i^e_j
                std::map<int, Rat> row;
                row[q.monomial_index.at({j, k})] += 1;
                row[q.monomial_index.at({i, k})] -= 1;
                row[q.monomial_index.at({i, j})] += 1;
                rels.push_back(std::move(row));
            }
    return rels;
}

void check_pipeline_caps(int n, int m) {
    if (m > 2) throw CapExceeded("cohomology pipelines cover m <= 2");
    if (n > pipeline_cap_n())
        throw CapExceeded("pipeline cap n <= " + std::to_string(pipeline_cap_n()) +
                          " exceeded at n=" + std::to_string(n));
}

ClassFunction traces_over_classes(Family equivariance, int n,
                                  const std::function<Rat(const SignedPermutation&)>& tr) {
    ClassFunction cf(equivariance, n);
    const GroupClasses& g = group_classes(equivariance, n);
    for (int i = 0; i < g.num_classes(); ++i)
        cf.value(i) = tr(class_representative(g.classes[i]));
    return cf;
}

}  // namespace

ClassFunction os_character_ambient(Family f, int n, int m) {
    check_pipeline_caps(n, m);
    Family equiv = (f == Family::A) ? Family::A : Family::BC;
    if (m == 0) return ClassFunction::constant(equiv, n, 1);
    Arrangement arr = build_arrangement(f, n);
    OsAction act(arr);
    if (m == 1) {
        return traces_over_classes(equiv, n, [&](const SignedPermutation& w) {
            long fixed = 0;
            for (int h = 0; h < arr.num_hyperplanes(); ++h)
                if (act.image(w, h) == h) ++fixed;
            return Rat(fixed);
        });
    }
    DegreeTwoQuotient q(arr.num_hyperplanes());
    q.reduce_relations(os_degree2_relations(arr, q));
    return traces_over_classes(equiv, n, [&](const SignedPermutation& w) {
        SignedPermutation winv = w.inverse();
        GenAction fwd = [&](int g) { return std::make_pair(1, act.image(w, g)); };
        GenAction bwd = [&](int g) { return std::make_pair(1, act.image(winv, g)); };
        return q.trace(fwd, bwd);
    });
}

ClassFunction os_cohomology_character(Family f, int n, int m) {
    ClassFunction ambient = os_character_ambient(f, n, m);
    return f == Family::D ? restrict_to_dn(ambient) : ambient;
}

namespace {

struct PsigmaGenerators {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // (i,j), i != j, 1-based, lex order
    std::map<std::pair<int, int>, int> index;

    explicit PsigmaGenerators(int n_) : n(n_) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) {
                    index[{i, j}] = static_cast<int>(pairs.size());
                    pairs.emplace_back(i, j);
                }
    }

    // a*_{i,j} -> sign(w(j)) a*_{|w(i)|,|w(j)|}
    std::pair<int, int> image(const SignedPermutation& w, int g) const {
        auto [i, j] = pairs[g];
        int wi = w.apply(i), wj = w.apply(j);
        return {wj > 0 ? 1 : -1, index.at({std::abs(wi), std::abs(wj)})};
    }
};

}  // namespace

ClassFunction psigma_cohomology_character(int n, int m) {
    check_pipeline_caps(n, m);
    if (m == 0) return ClassFunction::constant(Family::BC, n, 1);
    PsigmaGenerators gen(n);
    const int g = static_cast<int>(gen.pairs.size());
    if (m == 1) {
        return traces_over_classes(Family::BC, n, [&](const SignedPermutation& w) {
            long tr = 0;
            for (int k = 0; k < g; ++k) {
                auto [sign, image] = gen.image(w, k);
                if (image == k) tr += sign;
            }
            return Rat(tr);
        });
    }
    DegreeTwoQuotient q(g);
    std::vector<std::map<int, Rat>> rels;
    auto wedge = [&](int g1, int g2, std::map<int, Rat>& row, int coef) {
        if (g1 == g2) return;  // a^a = 0 contributes nothing
        int sign = 1;
        if (g1 > g2) {
            std::swap(g1, g2);
            sign = -1;
        }
        row[q.monomial_index.at({g1, g2})] += coef * sign;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::map<int, Rat> row;
            wedge(gen.index.at({i, j}), gen.index.at({j, i}), row, 1);
            rels.push_back(std::move(row));
        }
    for (int l = 1; l <= n; ++l)
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n; ++i) {
                if (l == j || l == i || j == i) continue;
                std::map<int, Rat> row;
                wedge(gen.index.at({l, j}), gen.index.at({j, i}), row, 1);
                wedge(gen.index.at({l, j}), gen.index.at({l, i}), row, -1);
                wedge(gen.index.at({i, j}), gen.index.at({l, i}), row, 1);
                for (auto it = row.begin(); it != row.end();)
                    it = (it->second == 0) ? row.erase(it) : std::next(it);
                if (!row.empty()) rels.push_back(std::move(row));
            }
    q.reduce_relations(std::move(rels));
    return traces_over_classes(Family::BC, n, [&](const SignedPermutation& w) {
        SignedPermutation winv = w.inverse();
        GenAction fwd = [&](int k) { return gen.image(w, k); };
        GenAction bwd = [&](int k) { return gen.image(winv, k); };
        return q.trace(fwd, bwd);
    });
}

PipelineSource parse_pipeline(const std::string& s) {
    if (s == "os") return PipelineSource::os;
    if (s == "psigma") return PipelineSource::psigma;
    throw ParseError("unknown pipeline '" + s + "' (expected os or psigma)");
}

namespace {

// Character fed to the fitting/recovery stage: the B_n-equivariant one for
// families BC and D; the native S_n one for family A.
ClassFunction stage_character(PipelineSource source, Family f, int n, int m) {
    if (source == PipelineSource::os) {
        return os_character_ambient(f, n, m);
    }
    ClassFunction bc = psigma_cohomology_character(n, m);
    if (f != Family::A) return bc;
    ClassFunction out(Family::A, n);
    const GroupClasses& g = group_classes(Family::A, n);
    for (int i = 0; i < g.num_classes(); ++i) out.value(i) = bc.at(g.classes[i].type);
    return out;
}

}  // namespace

AnalyzeReport analyze(PipelineSource source, Family f, int m, int degree, int n_lo, int n_hi) {
    if (n_lo != 0)
        throw std::invalid_argument("analysis range must start at n = 0 for recovery");
    AnalyzeReport r;
    r.source = source;
    r.family = f;
    r.m = m;
    r.degree = degree;
    std::vector<ClassFunction> seq;
    for (int n = n_lo; n <= n_hi; ++n) {
        r.range.push_back(n);
        seq.push_back(stage_character(source, f, n, m));
        r.dimensions.emplace_back(n, seq.back().at_identity());
    }
    r.poly = fit(seq, degree);
    r.recovered = recover_from_sequence(seq, seq.front().family());
    for (const auto& [a, chi] : r.recovered.module.components)
        r.components.emplace(a, decompose_into_irreducibles(chi));
    r.sym_restriction = r.poly.restrict_to_sym();
    return r;
}

std::string report_to_json(const AnalyzeReport& r) {
    json j;
    j["pipeline"] = r.source == PipelineSource::os ? "os" : "psigma";
    j["family"] = family_name(r.family);
    j["m"] = r.m;
    j["degree"] = r.degree;
    j["range"] = r.range;
    j["polynomial"] = r.poly.to_json_map();
    j["polynomial_binomial_form"] = r.poly.to_binomial_string();
    json decomp = json::object();
    for (const auto& [a, d] : r.components) {
        json entry = json::object();
        for (const auto& [label, mult] : d.multiplicities)
            entry[format_double_partition(label.full_at(a))] = mult;
        decomp[std::to_string(a)] = std::move(entry);
    }
    j["decomposition"] = std::move(decomp);
    j["decomposition_valid"] = r.recovered.is_valid;
    j["restriction_to_sym"] = r.sym_restriction.to_json_map();
    json dims = json::array();
    for (const auto& [n, d] : r.dimensions)
        dims.push_back({{"n", n}, {"dim", rat_to_string(d)}});
    j["dimensions"] = std::move(dims);
    return j.dump(2);
}

std::string report_to_latex(const AnalyzeReport& r) {
    std::string out;
    out += "\\chi = " + r.poly.to_latex() + "\n";
    out += "V = ";
    bool first = true;
    for (const auto& [a, d] : r.components) {
        for (const auto& [label, mult] : d.multiplicities) {
            if (!first) out += " \\oplus ";
            first = false;
            out += "M(" + format_double_partition(label.full_at(a)) + ")";
            if (mult > 1) out += "^{\\oplus " + std::to_string(mult) + "}";
        }
    }
    if (first) out += "0";
    out += "\n\\chi|_{S_n} = " + r.sym_restriction.to_latex() + "\n";
    return out;
}

}  // namespace weylchar

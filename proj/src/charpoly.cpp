#include "weylchar/charpoly.hpp"

#include <algorithm>
#include <sstream>

#include "weylchar/errors.hpp"

namespace weylchar {

CharacterPolynomial::CharacterPolynomial(long c) {
    if (c != 0) terms_[{}] = Rat(c);
}

CharacterPolynomial::CharacterPolynomial(const Rat& c) {
    if (c != 0) terms_[{}] = c;
}

CharacterPolynomial CharacterPolynomial::X(int r) {
    CharacterPolynomial p;
    p.terms_[{{var_x(r), 1}}] = 1;
    return p;
}

CharacterPolynomial CharacterPolynomial::Y(int r) {
    CharacterPolynomial p;
    p.terms_[{{var_y(r), 1}}] = 1;
    return p;
}

namespace {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto [key, e] : m) d += var_index(key) * e;
    return d;
}

}  // namespace

int CharacterPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

bool CharacterPolynomial::has_y() const {
    for (const auto& [m, c] : terms_)
        for (auto [key, e] : m)
            if (var_is_y(key)) return true;
    return false;
}

void CharacterPolynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CharacterPolynomial& CharacterPolynomial::operator+=(const CharacterPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CharacterPolynomial& CharacterPolynomial::operator-=(const CharacterPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CharacterPolynomial CharacterPolynomial::operator+(const CharacterPolynomial& o) const {
    CharacterPolynomial r = *this;
    r += o;
    return r;
}

CharacterPolynomial CharacterPolynomial::operator-(const CharacterPolynomial& o) const {
    CharacterPolynomial r = *this;
    r -= o;
    return r;
}

CharacterPolynomial CharacterPolynomial::operator-() const {
    CharacterPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

CharacterPolynomial CharacterPolynomial::operator*(const CharacterPolynomial& o) const {
    CharacterPolynomial r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            // merge sorted exponent lists
            Monomial m;
            m.reserve(m1.size() + m2.size());
            size_t i = 0, j = 0;
            while (i < m1.size() || j < m2.size()) {
                if (j == m2.size() || (i < m1.size() && m1[i].first < m2[j].first)) {
                    m.push_back(m1[i++]);
                } else if (i == m1.size() || m2[j].first < m1[i].first) {
                    m.push_back(m2[j++]);
                } else {
                    m.emplace_back(m1[i].first, m1[i].second + m2[j].second);
                    ++i;
                    ++j;
                }
            }
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

CharacterPolynomial CharacterPolynomial::scaled(const Rat& c) const {
    CharacterPolynomial r;
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

CharacterPolynomial CharacterPolynomial::pow(int k) const {
    CharacterPolynomial r(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

CharacterPolynomial CharacterPolynomial::binom(const CharacterPolynomial& p, int k) {
    CharacterPolynomial r(1);
    for (int i = 0; i < k; ++i) r = r * (p - CharacterPolynomial(i));
    return r.scaled(make_rat(1, factorial(k)));
}

Rat CharacterPolynomial::evaluate(const DoublePartition& c) const {
    Rat total = 0;
    for (const auto& [m, coef] : terms_) {
        Rat v = coef;
        for (auto [key, e] : m) {
            int r = var_index(key);
            long base = var_is_y(key) ? c.minus.multiplicity(r) : c.plus.multiplicity(r);
            if (base == 0) {
                v = 0;
                break;
            }
            for (int i = 0; i < e; ++i) v *= base;
        }
        total += v;
    }
    return total;
}

Rat CharacterPolynomial::evaluate_identity(int n) const { return evaluate(identity_type(n)); }

CharacterPolynomial CharacterPolynomial::restrict_to_sym() const {
    CharacterPolynomial r;
    for (const auto& [m, c] : terms_) {
        bool hasy = false;
        for (auto [key, e] : m) hasy |= var_is_y(key);
        if (!hasy) r.terms_[m] = c;
    }
    return r;
}

CharacterPolynomial CharacterPolynomial::inflate_sym() const {
    if (has_y()) throw HasYVariables("inflate_sym expects a Y-free polynomial");
    CharacterPolynomial r;
    for (const auto& [m, c] : terms_) {
        CharacterPolynomial t(c);
        for (auto [key, e] : m) {
            int rr = var_index(key);
            t = t * (X(rr) + Y(rr)).pow(e);
        }
        r += t;
    }
    return r;
}

CharacterPolynomial gen_binom(const Partition& alpha, const Partition& beta) {
    CharacterPolynomial p(1);
    for (int r = 1; r <= alpha.first_part(); ++r)
        if (int m = alpha.multiplicity(r))
            p = p * CharacterPolynomial::binom(CharacterPolynomial::X(r), m);
    for (int r = 1; r <= beta.first_part(); ++r)
        if (int m = beta.multiplicity(r))
            p = p * CharacterPolynomial::binom(CharacterPolynomial::Y(r), m);
    return p;
}

CharacterPolynomial gen_binom(const DoublePartition& t) { return gen_binom(t.plus, t.minus); }

ClassFunction class_function_of(const CharacterPolynomial& p, Family f, int n) {
    ClassFunction cf(f, n);
    const GroupClasses& g = group_classes(f, n);
    for (int i = 0; i < g.num_classes(); ++i) cf.value(i) = p.evaluate(g.classes[i].type);
    return cf;
}

std::vector<std::pair<DoublePartition, Rat>> CharacterPolynomial::binomial_basis() const {
    CharacterPolynomial rest = *this;
    std::map<DoublePartition, Rat> coeffs;
    while (!rest.is_zero()) {
        // strip a monomial of maximal total degree
        auto best = rest.terms_.begin();
        int best_deg = monomial_degree(best->first);
        for (auto it = std::next(rest.terms_.begin()); it != rest.terms_.end(); ++it) {
            int d = monomial_degree(it->first);
            if (d > best_deg) {
                best = it;
                best_deg = d;
            }
        }
        std::vector<int> aparts, bparts;
        Rat scale = 1;
        for (auto [key, e] : best->first) {
            for (int i = 0; i < e; ++i)
                (var_is_y(key) ? bparts : aparts).push_back(var_index(key));
            scale *= factorial(e);
        }
        std::sort(aparts.begin(), aparts.end(), std::greater<int>());
        std::sort(bparts.begin(), bparts.end(), std::greater<int>());
        DoublePartition t(Partition(std::move(aparts)), Partition(std::move(bparts)));
        Rat c = best->second * scale;
        rest -= gen_binom(t).scaled(c);
        coeffs[t] += c;
    }
    std::vector<std::pair<DoublePartition, Rat>> out;
    for (auto& [t, c] : coeffs)
        if (c != 0) out.emplace_back(t, c);
    return out;
}

namespace {

std::string var_name(int key) {
    return (var_is_y(key) ? "Y" : "X") + std::to_string(var_index(key));
}

std::string monomial_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += '*';
        s += var_name(m[i].first);
        if (m[i].second > 1) s += "^" + std::to_string(m[i].second);
    }
    return s;
}

// signed term list -> "a - b + c" rendering
std::string join_terms(const std::vector<std::pair<Rat, std::string>>& parts,
                       const std::string& times = "*") {
    if (parts.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto& [c, body] = parts[i];
        Rat a = abs(c);
        std::string mag;
        if (body.empty()) {
            mag = rat_to_string(a);
        } else if (a == 1) {
            mag = body;
        } else {
            mag = rat_to_string(a) + times + body;
        }
        if (i == 0) {
            out += (c < 0 ? "-" : "") + mag;
        } else {
            out += (c < 0 ? " - " : " + ") + mag;
        }
    }
    return out;
}

}  // namespace

std::string CharacterPolynomial::to_string() const {
    // degree-descending, then canonical monomial order
    std::vector<std::pair<Monomial, Rat>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int da = monomial_degree(a.first), db = monomial_degree(b.first);
        if (da != db) return da > db;
        return a.first < b.first;
    });
    std::vector<std::pair<Rat, std::string>> parts;
    for (const auto& [m, c] : items)
        parts.emplace_back(c, m.empty() ? "" : monomial_string(m));
    return join_terms(parts);
}

namespace {

std::string binom_product_string(const DoublePartition& t, bool latex) {
    std::string s;
    auto emit = [&](char letter, int r, int k) {
        if (!s.empty()) s += latex ? "" : "*";
        std::string var = latex ? (std::string(1, letter) + "_" + std::to_string(r))
                                : (std::string(1, letter) + std::to_string(r));
        if (k == 1 && !latex) {
            s += var;
        } else if (latex) {
            s += "\\binom{" + var + "}{" + std::to_string(k) + "}";
        } else {
            s += "C(" + var + "," + std::to_string(k) + ")";
        }
    };
    for (int r = 1; r <= t.plus.first_part(); ++r)
        if (int k = t.plus.multiplicity(r)) emit('X', r, k);
    for (int r = 1; r <= t.minus.first_part(); ++r)
        if (int k = t.minus.multiplicity(r)) emit('Y', r, k);
    return s;
}

std::string binomial_form(const CharacterPolynomial& p, bool latex) {
    std::vector<std::pair<Rat, std::string>> parts;
    for (const auto& [t, c] : p.binomial_basis())
        parts.emplace_back(c, binom_product_string(t, latex));
    return join_terms(parts, latex ? "" : "*");
}

}  // namespace

std::string CharacterPolynomial::to_binomial_string() const { return binomial_form(*this, false); }

std::string CharacterPolynomial::to_latex() const { return binomial_form(*this, true); }

std::map<std::string, std::string> CharacterPolynomial::to_json_map() const {
    std::map<std::string, std::string> out;
    for (const auto& [m, c] : terms_) out[monomial_string(m)] = rat_to_string(c);
    return out;
}

CharacterPolynomial CharacterPolynomial::from_json_map(
    const std::map<std::string, std::string>& data) {
    CharacterPolynomial p;
    for (const auto& [mono, coef] : data) {
        Monomial m;
        if (mono != "1") {
            std::stringstream ss(mono);
            std::string factor;
            while (std::getline(ss, factor, '*')) {
                if (factor.empty() || (factor[0] != 'X' && factor[0] != 'Y'))
                    throw ParseError("bad monomial factor '" + factor + "'");
                bool isy = factor[0] == 'Y';
                auto caret = factor.find('^');
                int r = std::stoi(factor.substr(1, caret - 1));
                int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
                if (r < 1 || e < 1) throw ParseError("bad monomial factor '" + factor + "'");
                m.emplace_back(isy ? var_y(r) : var_x(r), e);
            }
            std::sort(m.begin(), m.end());
            for (size_t i = 0; i + 1 < m.size(); ++i)
                if (m[i].first == m[i + 1].first)
                    throw ParseError("repeated variable in monomial '" + mono + "'");
        }
        p.add_term(m, parse_rational(coef));
    }
    return p;
}

std::vector<int> default_fit_range(int degree) {
    std::vector<int> ns;
    for (int n = 0; n <= 2 * degree; ++n) ns.push_back(n);
    return ns;
}

CharacterPolynomial fit(const std::vector<ClassFunction>& data, int degree) {
    if (data.empty()) throw std::invalid_argument("fit needs at least one class function");
    Family f = data.front().family();
    if (f == Family::D) throw GroupMismatch("fit operates on A or BC class functions");
    for (const auto& cf : data)
        if (cf.family() != f) throw GroupMismatch("fit data mixes families");

    // basis: generalized binomials of total size <= degree
    std::vector<DoublePartition> basis;
    for (int s = 0; s <= degree; ++s)
        for (const auto& t : double_partitions_of(s)) {
            if (f == Family::A && !t.minus.empty()) continue;
            basis.push_back(t);
        }
    const int cols = static_cast<int>(basis.size());
    std::vector<CharacterPolynomial> basis_polys;
    basis_polys.reserve(cols);
    for (const auto& t : basis) basis_polys.push_back(gen_binom(t));

    std::vector<std::vector<Rat>> rows;  // augmented [A | b]
    for (const auto& cf : data) {
        const GroupClasses& g = cf.group();
        for (int ci = 0; ci < g.num_classes(); ++ci) {
            std::vector<Rat> row(cols + 1);
            for (int j = 0; j < cols; ++j) row[j] = basis_polys[j].evaluate(g.classes[ci].type);
            row[cols] = cf.value(ci);
            rows.push_back(std::move(row));
        }
    }

    // exact Gaussian elimination; rank check before accepting a solution
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_row(cols, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < nrows; ++col) {
        int prow = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r][col] != 0) {
                prow = r;
                break;
            }
        if (prow < 0) continue;
        std::swap(rows[rank], rows[prow]);
        Rat inv = 1 / rows[rank][col];
        for (int j = col; j <= cols; ++j) rows[rank][j] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat factor = rows[r][col];
            for (int j = col; j <= cols; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (int col = 0; col < cols; ++col)
        if (pivot_row[col] < 0)
            throw DegenerateFit("supplied n-range does not pin down coefficient of " +
                                format_double_partition(basis[col]) + "; rank " +
                                std::to_string(rank) + " < " + std::to_string(cols));
    for (int r = rank; r < nrows; ++r)
        if (rows[r][cols] != 0)
            throw InconsistentFit("no polynomial of degree <= " + std::to_string(degree) +
                                  " interpolates the data");

    CharacterPolynomial out;
    for (int col = 0; col < cols; ++col) {
        const Rat& c = rows[pivot_row[col]][cols];
        if (c != 0) out += basis_polys[col].scaled(c);
    }
    return out;
}

}  // namespace weylchar

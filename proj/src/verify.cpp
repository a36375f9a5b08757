#include "weylchar/verify.hpp"

#include <random>

#include "weylchar/charpoly.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/fiw_module.hpp"
#include "weylchar/hyperoct.hpp"

namespace weylchar {

namespace {

void check(SuiteResult& r, bool ok, const std::string& what) {
    if (ok) {
        ++r.passed;
    } else {
        ++r.failed;
        r.failures.push_back(what);
    }
}

}  // namespace

SuiteResult verify_orthogonality(int max_n) {
    SuiteResult r;
    r.name = "orthogonality";
    for (int n = 1; n <= max_n; ++n) {
        const auto& labels = double_partitions_of(n);
        std::vector<ClassFunction> chars;
        for (const auto& t : labels)
            chars.push_back(irr_character(Family::BC, IrreducibleLabel::from_full(t), n));
        Rat order(group_order(Family::BC, n));
        for (size_t i = 0; i < chars.size(); ++i)
            for (size_t j = i; j < chars.size(); ++j) {
                Rat ip = inner_product(chars[i], chars[j]);
                check(r, ip == (i == j ? 1 : 0),
                      "B_" + std::to_string(n) + ": <" + format_double_partition(labels[i]) +
                          ", " + format_double_partition(labels[j]) + "> = " + rat_to_string(ip));
            }
        Rat dim2 = 0;
        for (const auto& chi : chars) dim2 += chi.at_identity() * chi.at_identity();
        check(r, dim2 == order,
              "B_" + std::to_string(n) + ": sum of dim^2 = " + rat_to_string(dim2));
    }
    return r;
}

SuiteResult verify_oracle(int max_n) {
    SuiteResult r;
    r.name = "oracle";
    std::mt19937 rng(20240521);
    auto virtual_char = [&rng](int m) {
        ClassFunction chi(Family::BC, m);
        std::uniform_int_distribution<int> mult(-2, 2);
        for (const auto& t : double_partitions_of(m)) {
            int c = mult(rng);
            if (c != 0)
                chi += irr_character(Family::BC, IrreducibleLabel::from_full(t), m)
                           .scaled(Rat(c));
        }
        return chi;
    };
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            std::vector<ClassFunction> left = {
                trivial_character(Family::BC, m), sign_character(Family::BC, m),
                regular_character(Family::BC, m), virtual_char(m)};
            std::vector<ClassFunction> right = {
                trivial_character(Family::BC, n - m), sign_character(Family::BC, n - m),
                regular_character(Family::BC, n - m), virtual_char(n - m)};
            for (size_t i = 0; i < left.size(); ++i)
                for (size_t j = 0; j < right.size(); ++j) {
                    ClassFunction formula = induced_character(left[i], right[j]);
                    ClassFunction brute = brute_induced_character(left[i], right[j]);
                    check(r, formula == brute,
                          "induction mismatch at m=" + std::to_string(m) +
                              ", n=" + std::to_string(n) + ", inputs " + std::to_string(i) +
                              "/" + std::to_string(j));
                }
        }
    }
    return r;
}

SuiteResult verify_roundtrip(int max_degree, int cases, unsigned seed) {
    SuiteResult r;
    r.name = "roundtrip";
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);

    for (int c = 0; c < cases; ++c) {
        int d = deg(rng);
        CharacterPolynomial p;
        for (int s = 0; s <= d; ++s)
            for (const auto& t : double_partitions_of(s)) {
                int nu = num(rng);
                if (nu != 0) p += gen_binom(t).scaled(make_rat(nu, den(rng)));
            }
        std::vector<ClassFunction> data;
        for (int n : default_fit_range(d)) data.push_back(class_function_of(p, Family::BC, n));
        bool ok = false;
        std::string note;
        try {
            ok = fit(data, d) == p;
        } catch (const std::exception& e) {
            note = std::string(": ") + e.what();
        }
        check(r, ok, "fit round-trip failed at case " + std::to_string(c) + note);
    }

    std::uniform_int_distribution<int> gen_deg(0, 3);
    std::uniform_int_distribution<int> mult(0, 2);
    for (int c = 0; c < cases; ++c) {
        FIWSharpModule v;
        v.family = Family::BC;
        int top = gen_deg(rng);
        for (int a = 0; a <= top; ++a) {
            ClassFunction chi(Family::BC, a);
            for (const auto& t : double_partitions_of(a)) {
                int k = mult(rng);
                if (k != 0)
                    chi += irr_character(Family::BC, IrreducibleLabel::from_full(t), a)
                               .scaled(Rat(k));
            }
            if (!chi.is_zero()) v.components.emplace(a, std::move(chi));
        }
        std::vector<ClassFunction> seq;
        for (int n = 0; n <= v.generation_degree() + 2; ++n) seq.push_back(realize(v, n));
        bool ok = false;
        std::string note;
        try {
            RecoverResult rec = recover_from_sequence(seq, Family::BC);
            ok = rec.is_valid && rec.module == v;
        } catch (const std::exception& e) {
            note = std::string(": ") + e.what();
        }
        check(r, ok, "recover round-trip failed at case " + std::to_string(c) + note);
    }
    return r;
}

}  // namespace weylchar

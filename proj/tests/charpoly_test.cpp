#include <random>

#include "doctest.h"
#include "weylchar/charpoly.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/hyperoct.hpp"

using namespace weylchar;

namespace {
CharacterPolynomial X(int r) { return CharacterPolynomial::X(r); }
CharacterPolynomial Y(int r) { return CharacterPolynomial::Y(r); }
}  // namespace

TEST_CASE("ring arithmetic in canonical form") {
    CHECK((X(1) - Y(1)) * (X(1) + Y(1)) == X(1) * X(1) - Y(1) * Y(1));
    CharacterPolynomial p = X(2) * 3 - Y(1);
    CHECK(p + CharacterPolynomial(0) == p);
    CHECK((X(1) - Y(1)) * (X(1) + Y(1) - CharacterPolynomial(2)) ==
          X(1) * X(1) - Y(1) * Y(1) - X(1).scaled(2) + Y(1).scaled(2));
    CHECK((p - p).is_zero());
}

TEST_CASE("degrees follow deg X_i = deg Y_i = i") {
    CHECK(CharacterPolynomial(5).degree() == 0);
    CHECK(CharacterPolynomial().degree() == -1);
    CHECK((X(3) * Y(2) + X(1)).degree() == 5);
    CHECK(gen_binom(Partition{3, 2, 2, 1}, Partition{}).degree() == 8);
    CHECK(gen_binom(Partition{2}, Partition{1, 1}).degree() == 4);
}

TEST_CASE("worked generalized binomial from the X side") {
    // C(X,(3,2,2,1)) = X3 C(X2,2) X1 = 1/2 X3 X2^2 X1 - 1/2 X3 X2 X1
    CharacterPolynomial expect =
        (X(3) * X(2) * X(2) * X(1) - X(3) * X(2) * X(1)).scaled(Rat(1, 2));
    CHECK(gen_binom(Partition{3, 2, 2, 1}, Partition{}) == expect);
    CHECK(gen_binom(Partition{}, Partition{}) == CharacterPolynomial(1));
}

TEST_CASE("gen_binom is the class indicator on the matching group") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& t : double_partitions_of(n)) {
            CharacterPolynomial b = gen_binom(t);
            for (const auto& c : group_classes(Family::BC, n).classes)
                CHECK(b.evaluate(c.type) == (c.type == t ? 1 : 0));
        }
    }
}

TEST_CASE("gen_binom counts sub-cycle-type choices above its size") {
    CHECK(gen_binom(Partition{2}, Partition{1})
              .evaluate({Partition{2, 1}, Partition{1}}) == 1);
}

TEST_CASE("evaluation") {
    CHECK((X(1) - Y(1)).evaluate({Partition{1, 1, 1}, Partition{}}) == 3);
    CHECK((X(1) - Y(1)).evaluate({Partition{}, Partition{1, 1, 1}}) == -3);
    CharacterPolynomial p = CharacterPolynomial::binom(X(1), 2).scaled(2) +
                            CharacterPolynomial::binom(Y(1), 2).scaled(2) + X(2).scaled(2);
    CHECK(p.evaluate({Partition{2}, Partition{1}}) == 2);
}

TEST_CASE("evaluation is a ring homomorphism per cycle type") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        CharacterPolynomial p, q;
        for (int s = 0; s <= 3; ++s)
            for (const auto& t : double_partitions_of(s)) {
                p += gen_binom(t).scaled(coef(rng));
                q += gen_binom(t).scaled(coef(rng));
            }
        for (const auto& c : group_classes(Family::BC, 4).classes)
            CHECK((p * q).evaluate(c.type) == p.evaluate(c.type) * q.evaluate(c.type));
    }
}

TEST_CASE("restriction and inflation") {
    CHECK((X(1) - Y(1)).restrict_to_sym() == X(1));
    CharacterPolynomial h1 = CharacterPolynomial::binom(X(1), 2).scaled(2) -
                             CharacterPolynomial::binom(Y(1), 2).scaled(2);
    CHECK(h1.restrict_to_sym() == CharacterPolynomial::binom(X(1), 2).scaled(2));
    CHECK(CharacterPolynomial(1).restrict_to_sym() == CharacterPolynomial(1));

    CHECK((X(1) - CharacterPolynomial(1)).inflate_sym() ==
          X(1) + Y(1) - CharacterPolynomial(1));
    CHECK(CharacterPolynomial(1).inflate_sym() == CharacterPolynomial(1));
    CHECK(CharacterPolynomial::binom(X(1), 2).inflate_sym() ==
          (X(1) + Y(1)) * (X(1) + Y(1) - CharacterPolynomial(1)).scaled(Rat(1, 2)));
    CHECK_THROWS_AS((X(1) * Y(2)).inflate_sym(), HasYVariables);

    // restrict .o. inflate = identity on Y-free polynomials
    CharacterPolynomial p = X(1) * X(2) - X(3).scaled(4) + CharacterPolynomial(2);
    CHECK(p.inflate_sym().restrict_to_sym() == p);
}

TEST_CASE("fit recovers the signed permutation character") {
    std::vector<ClassFunction> data;
    for (int n = 1; n <= 4; ++n) data.push_back(class_function_of(X(1) - Y(1), Family::BC, n));
    CHECK(fit(data, 1) == X(1) - Y(1));
}

TEST_CASE("fit of constants") {
    std::vector<ClassFunction> data{ClassFunction::constant(Family::BC, 0, 1),
                                    ClassFunction::constant(Family::BC, 1, 1),
                                    ClassFunction::constant(Family::BC, 2, 1)};
    CHECK(fit(data, 0) == CharacterPolynomial(1));
}

TEST_CASE("fit errors") {
    // degree-2 coefficients cannot be pinned down from n = 0..1 alone
    std::vector<ClassFunction> small{ClassFunction::constant(Family::BC, 0, 1),
                                     ClassFunction::constant(Family::BC, 1, 1)};
    CHECK_THROWS_AS(fit(small, 2), DegenerateFit);

    // Y2^2 has degree 4 and is not a degree <= 2 polynomial
    CharacterPolynomial q = Y(2) * Y(2);
    std::vector<ClassFunction> data;
    for (int n : default_fit_range(2)) data.push_back(class_function_of(q, Family::BC, n));
    CHECK_THROWS_AS(fit(data, 2), InconsistentFit);
}

TEST_CASE("json round trip and formatting") {
    CharacterPolynomial p =
        X(1) * X(1) * Y(3).scaled(Rat(3, 2)) - X(2).scaled(2) + CharacterPolynomial(1);
    CHECK(CharacterPolynomial::from_json_map(p.to_json_map()) == p);
    auto m = p.to_json_map();
    CHECK(m.at("X1^2*Y3") == "3/2");
    CHECK(m.at("X2") == "-2");
    CHECK(m.at("1") == "1");

    CharacterPolynomial h1 = CharacterPolynomial::binom(X(1), 2).scaled(2) -
                             CharacterPolynomial::binom(Y(1), 2).scaled(2);
    CHECK(h1.to_binomial_string() == "2*C(X1,2) - 2*C(Y1,2)");
    CHECK(h1.to_latex() == "2\\binom{X_1}{2} - 2\\binom{Y_1}{2}");
    CHECK((X(1) - Y(1)).to_string() == "X1 - Y1");
}

TEST_CASE("binomial basis expansion is exact") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        CharacterPolynomial p;
        for (int s = 0; s <= 3; ++s)
            for (const auto& t : double_partitions_of(s)) p += gen_binom(t).scaled(coef(rng));
        CharacterPolynomial back;
        for (const auto& [t, c] : p.binomial_basis()) back += gen_binom(t).scaled(c);
        CHECK(back == p);
    }
}

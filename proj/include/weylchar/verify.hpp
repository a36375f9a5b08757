#pragma once

#include <string>
#include <vector>

namespace weylchar {

struct SuiteResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
};

/// Row/column orthogonality and sum of squared dimensions for the full
/// B_n character table built from irr_char_poly, n = 1..max_n.
SuiteResult verify_orthogonality(int max_n);

/// induced_character == brute_induced_character over the generator set of
/// inputs (trivial, sign, regular, one seeded virtual character per degree)
/// for every split m + (n-m) = n, n <= max_n.
SuiteResult verify_oracle(int max_n);

/// fit(evaluate(P)) == P and recover(realize(V)) == V over seeded random
/// inputs; `cases` of each.
SuiteResult verify_roundtrip(int max_degree, int cases, unsigned seed);

}  // namespace weylchar

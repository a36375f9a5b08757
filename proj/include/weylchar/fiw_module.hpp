#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylchar/charpoly.hpp"
#include "weylchar/hyperoct.hpp"

namespace weylchar {

/// Exact polynomial in a single variable n.
struct UnivariatePoly {
    std::vector<Rat> coeffs;  // coeffs[k] * n^k

    Rat evaluate(long n) const;
    UnivariatePoly& operator+=(const UnivariatePoly& o);
    bool operator==(const UnivariatePoly& o) const;
    bool is_zero() const;
    std::string to_string() const;  // e.g. "n^2 - n"
};

/// C(n, a) * scale as a polynomial in n.
UnivariatePoly binom_univariate(int a, const Rat& scale);

/// V = (+)_a M_W(U_a), stored by the characters of the generating
/// representations U_a. Values may be virtual characters during
/// intermediate computation; validity is a checkable property.
struct FIWSharpModule {
    Family family = Family::BC;
    std::map<int, ClassFunction> components;  // degree a -> chi of U_a (nonzero)

    int generation_degree() const;  // -1 for the empty module
    bool operator==(const FIWSharpModule& o) const;
};

/// chi of V_n = sum_a chi of M(U_a)_n, each via the induced-character formula.
ClassFunction realize(const FIWSharpModule& v, int n);

/// sum_a P^{U_a}; exact for every n.
CharacterPolynomial module_char_poly(const FIWSharpModule& v);

/// dim V_n = sum_a C(n,a) dim U_a as an exact polynomial in n.
UnivariatePoly dimension_poly(const FIWSharpModule& v);

struct RecoverResult {
    FIWSharpModule module;
    bool is_valid = true;  // every U_a decomposes with nonnegative multiplicities
};

/// Inductive recovery U_n = V_n - sum_{k<n} chi of M(U_k)_n from a consecutive
/// character sequence n = 0..N. Throws NotACharacter when some U_a fails to be
/// even a virtual character (non-integral multiplicity).
RecoverResult recover_from_sequence(const std::vector<ClassFunction>& seq, Family f);

/// JSON schema {"family":"BC","components":{"2":{"1|1":1}}} with each U_a
/// encoded by irreducible multiplicities.
std::string module_to_json(const FIWSharpModule& v);
FIWSharpModule module_from_json(const std::string& text);

}  // namespace weylchar

#pragma once

#include <map>
#include <optional>

#include "weylchar/charpoly.hpp"
#include "weylchar/groups.hpp"
#include "weylchar/sym_char.hpp"

namespace weylchar {

/// Stable label (lambda, nu) of the irreducible V(lambda,nu)_n: lambda is the
/// stable top partition (first row removed), nu the negative side. Defined at
/// every n where pad(lambda, n - |nu|) exists.
struct IrreducibleLabel {
    Partition lambda;
    Partition nu;

    int weight() const { return lambda.size() + nu.size(); }
    bool exists_at(int n) const { return pad(lambda, n - nu.size()).has_value(); }
    DoublePartition full_at(int n) const;  // throws PaddingFails
    static IrreducibleLabel from_full(const DoublePartition& t);

    bool operator==(const IrreducibleLabel& o) const {
        return lambda == o.lambda && nu == o.nu;
    }
    bool operator<(const IrreducibleLabel& o) const;
    std::string to_string() const { return format_double_partition({lambda, nu}); }
};

/// P^(lambda,0): character polynomial of the pullback V(lambda,0)_n,
/// obtained from P^lambda by replacing each X_r with X_r + Y_r. Cached.
const CharacterPolynomial& char_poly_positive(const Partition& lambda);

/// chi of V(0, lambda[n]) at class c = (alpha,beta):
/// (-1)^{l(beta)} P^(lambda,0)(alpha,beta). Throws PaddingFails.
Rat sign_twisted_value(const Partition& lambda, int n, const DoublePartition& c);

/// Character of Ind_{W_m x W_{n-m}}^{W_n}(U x U') by the closed formula
///   chi(rho,sigma) = sum_{(a,b) of size m} chi_U(a,b) chi_U'(complement)
///                    C(X,a)C(Y,b)(rho,sigma).
ClassFunction induced_character(const ClassFunction& chi_u, const ClassFunction& chi_uprime);

/// The master character polynomial P^(lambda,nu) of V(lambda,nu)_n,
/// independent of n. Cached; degree <= |lambda|+|nu|.
const CharacterPolynomial& irr_char_poly(const IrreducibleLabel& label);

/// Character values of the irreducible with stable label `label` on W_n.
ClassFunction irr_character(Family f, const IrreducibleLabel& label, int n);

/// P^U = sum_{(a,b) of m} chi_U(a,b) C(X,a)C(Y,b); the character polynomial
/// of M_W(U) for all n.
CharacterPolynomial m_module_char_poly(const ClassFunction& chi_u);

/// Character polynomial of the represented functor M_W(m); for family D the
/// value at n = m deviates from the polynomial and is reported separately.
struct FreeModuleChar {
    CharacterPolynomial poly;
    std::optional<Rat> d_identity_value_at_m;  // 2^{m-1} m!, family D only
};
FreeModuleChar free_module_char_poly(int m, Family f);

/// M(m) (x) M(p) = (+)_d mult_d M(m+p-d): multiplicity of M(m+p-d) keyed by
/// m+p-d, for d = 0..min(m,p). Families A and BC.
std::map<int, long> tensor_decompose_free(int m, int p, Family f);

/// <phi, psi> = (1/|G|) sum |c| phi(c) psi(c) (rational-valued characters).
Rat inner_product(const ClassFunction& phi, const ClassFunction& psi);

struct Decomposition {
    std::map<IrreducibleLabel, long> multiplicities;
    bool is_true_character = true;  // all multiplicities >= 0
};

/// Inner products of phi against the full irreducible table of W_n.
/// Throws NonIntegralMultiplicity if phi is not a virtual character.
Decomposition decompose_into_irreducibles(const ClassFunction& phi);

/// Restriction of a B_n class function to D_n; both split halves of a class
/// receive the value of the ambient B_n class.
ClassFunction restrict_to_dn(const ClassFunction& phi);

// Small character constructors used across modules and tests.
ClassFunction trivial_character(Family f, int n);
ClassFunction sign_character(Family f, int n);      // BC: eps = (-1)^{l(beta)}
ClassFunction regular_character(Family f, int n);

int irr_table_cap();

}  // namespace weylchar

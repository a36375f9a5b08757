#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylchar/groups.hpp"
#include "weylchar/partitions.hpp"
#include "weylchar/rational.hpp"

namespace weylchar {

// Variable encoding: X_r -> 2r, Y_r -> 2r+1. Monomials are sorted
// (variable, exponent) lists with positive exponents.
using Monomial = std::vector<std::pair<int, int>>;

inline int var_x(int r) { return 2 * r; }
inline int var_y(int r) { return 2 * r + 1; }
inline bool var_is_y(int key) { return key & 1; }
inline int var_index(int key) { return key / 2; }

/// Element of the graded ring Q[X_1,Y_1,X_2,Y_2,...], deg X_i = deg Y_i = i,
/// stored in canonical sparse monomial form (no zero coefficients).
class CharacterPolynomial {
public:
    CharacterPolynomial() = default;
    CharacterPolynomial(long c);
    CharacterPolynomial(const Rat& c);

    static CharacterPolynomial X(int r);
    static CharacterPolynomial Y(int r);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool has_y() const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    CharacterPolynomial operator+(const CharacterPolynomial& o) const;
    CharacterPolynomial operator-(const CharacterPolynomial& o) const;
    CharacterPolynomial operator*(const CharacterPolynomial& o) const;
    CharacterPolynomial operator-() const;
    CharacterPolynomial& operator+=(const CharacterPolynomial& o);
    CharacterPolynomial& operator-=(const CharacterPolynomial& o);
    CharacterPolynomial scaled(const Rat& c) const;
    CharacterPolynomial pow(int k) const;
    bool operator==(const CharacterPolynomial& o) const { return terms_ == o.terms_; }

    /// C(p, k) = p(p-1)...(p-k+1)/k! for a polynomial argument.
    static CharacterPolynomial binom(const CharacterPolynomial& p, int k);

    /// Substitute X_r := n_r(alpha), Y_r := n_r(beta) for c = (alpha, beta).
    Rat evaluate(const DoublePartition& c) const;
    Rat evaluate_identity(int n) const;

    /// All Y_r := 0.
    CharacterPolynomial restrict_to_sym() const;
    /// Each X_r := X_r + Y_r; input must be Y-free.
    CharacterPolynomial inflate_sym() const;

    /// Exact expansion in the generalized-binomial basis, canonically ordered.
    std::vector<std::pair<DoublePartition, Rat>> binomial_basis() const;

    std::string to_string() const;                 // expanded monomial form
    std::string to_binomial_string() const;        // e.g. "2*C(X1,2) - 2*C(Y1,2)"
    std::string to_latex() const;                  // binomial-coefficient form

    /// JSON object {monomial -> rational string}, monomial syntax "X1^2*Y3".
    std::map<std::string, std::string> to_json_map() const;
    static CharacterPolynomial from_json_map(const std::map<std::string, std::string>&);

private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat> terms_;
};

/// prod_r C(X_r, n_r(alpha)) C(Y_r, n_r(beta)); on B_{|alpha|+|beta|} the 0/1
/// indicator of the class (alpha, beta).
CharacterPolynomial gen_binom(const Partition& alpha, const Partition& beta);
CharacterPolynomial gen_binom(const DoublePartition& t);

/// Evaluate a polynomial on every class of W_n.
ClassFunction class_function_of(const CharacterPolynomial& p, Family f, int n);

/// Unique polynomial of degree <= d agreeing with every supplied class
/// function, solved exactly in the generalized-binomial basis.
/// Throws DegenerateFit / InconsistentFit.
CharacterPolynomial fit(const std::vector<ClassFunction>& data, int degree);

/// Default n-range 0..2d used when only a degree bound is given.
std::vector<int> default_fit_range(int degree);

}  // namespace weylchar

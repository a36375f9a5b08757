#pragma once

#include <map>

#include "weylchar/charpoly.hpp"
#include "weylchar/partitions.hpp"

namespace weylchar {

/// Exact irreducible S_n character value chi^lambda at cycle type rho,
/// computed by the Murnaghan-Nakayama recursion with memoization.
/// chi^{} on {} is 1. Throws SizeMismatch when |lambda| != |rho|.
long mn_character(const Partition& lambda, const Partition& rho);

/// Full character table of S_n: values[(lambda, rho)] over all pairs of
/// partitions of n, rows/columns in canonical partition order.
struct SymCharTable {
    int n = 0;
    std::map<std::pair<Partition, Partition>, long> values;

    long at(const Partition& lambda, const Partition& rho) const {
        return values.at({lambda, rho});
    }
};

SymCharTable sym_char_table(int n);

/// Character polynomial P^lambda of the stable irreducible V(lambda)_n:
///   P^lambda = sum_{|rho|+|sigma|=|lambda|}
///              (-1)^{l(sigma)} chi^lambda_{rho u sigma} / z_sigma * C(X, rho).
/// Cached; degree <= |lambda|.
const CharacterPolynomial& sym_char_poly(const Partition& lambda);

}  // namespace weylchar

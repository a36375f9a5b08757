#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace weylchar {

// Exact rational scalar used throughout. No floating point anywhere.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rational(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

// The two-argument mpq_class constructor does not canonicalize.
inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_int64(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("rational is not an integer");
    return static_cast<long>(q.get_num().get_si());
}

// `long` rather than `long` so the results mix with mpq_class operators.
inline long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline long binomial_ll(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace weylchar

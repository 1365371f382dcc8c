#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace graphscan {

/// Exact arbitrary-precision rational. All permutation-null probabilities and
/// moments are carried in this type; conversion to double happens only at API
/// boundaries (JSON reports, floating-point statistics).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

/// "p/q" rendering used in JSON reports; integers render without "/1".
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Falling factorial n(n-1)...(n-k+1) as an exact integer; 1 for k == 0,
/// 0 as soon as a factor reaches zero or n < k.
inline Integer falling_factorial(long n, int k) {
    Integer acc = 1;
    for (int i = 0; i < k; ++i) {
        long f = n - i;
        if (f <= 0) return Integer(0);
        acc *= f;
    }
    return acc;
}

inline Rational rational_pow(const Rational& base, int exp) {
    Rational acc(1);
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

inline Integer binomial_exact(long n, int k) {
    if (k < 0 || n < k) return Integer(0);
    Integer acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

}  // namespace graphscan

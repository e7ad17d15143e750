// Exact arithmetic typedefs and helpers. All coefficients in this library are
// exact rationals over arbitrary-precision integers; no floating point.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wps {

using Z = mpz_class;
using Q = mpq_class;

inline Q make_q(long num, long den = 1) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "p/q" form with q > 0 and gcd(p,q) = 1; integers print without "/1".
inline std::string to_string(const Q& q) { return q.get_str(); }
inline std::string to_string(const Z& z) { return z.get_str(); }

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Z factorial(int n) {
    Z r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline long lcm_long(long a, long b) {
    Z g = gcd(Z(a), Z(b));
    return static_cast<long>(Z(Z(a) / g * b).get_si());
}

}  // namespace wps

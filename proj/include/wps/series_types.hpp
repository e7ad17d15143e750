// Hilbert series as a rational function: an integer-coefficient numerator
// over a denominator given by a multiset of exponents {e}, meaning
// prod_e (1 - t^e). Shared between the Groebner layer (which produces them)
// and the quasi-polynomial layer (which consumes them).
#pragma once

#include <set>
#include <vector>

#include "wps/errors.hpp"
#include "wps/rational.hpp"

namespace wps {

namespace zpoly {

// Dense univariate integer polynomials, lowest coefficient first.
inline void trim(std::vector<Z>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline std::vector<Z> mul(const std::vector<Z>& a, const std::vector<Z>& b) {
    std::vector<Z> r(a.size() + b.size() - 1, Z(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline std::vector<Z> one_minus_t_pow(long e) {
    std::vector<Z> f(e + 1, Z(0));
    f[0] = 1;
    f[e] = -1;
    return f;
}

// 1 + t + ... + t^{e-1}
inline std::vector<Z> geometric(long e) { return std::vector<Z>(e, Z(1)); }

inline bool is_zero(const std::vector<Z>& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

inline long degree(const std::vector<Z>& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}

inline Z eval_at_one(const std::vector<Z>& p) {
    Z s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// Exact division by (1 - t); throws if not divisible.
inline std::vector<Z> divide_by_one_minus_t(const std::vector<Z>& p) {
    if (is_zero(p)) return {Z(0)};
    // p(t) = (1-t) q(t): q_i = p_0 + p_1 + ... + p_i (and the total sum must vanish)
    if (eval_at_one(p) != 0) throw DomainError("numerator not divisible by (1-t)");
    std::vector<Z> q(p.size() > 1 ? p.size() - 1 : 1, Z(0));
    Z acc = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        acc += p[i];
        q[i] = acc;
    }
    trim(q);
    return q;
}

// Multiplicity of the root t = 1.
inline int multiplicity_at_one(std::vector<Z> p) {
    if (is_zero(p)) throw DomainError("zero polynomial");
    int m = 0;
    while (eval_at_one(p) == 0) {
        p = divide_by_one_minus_t(p);
        ++m;
    }
    return m;
}

}  // namespace zpoly

struct HilbertSeries {
    std::vector<Z> numerator{Z(1)};       // dense, lowest degree first
    std::multiset<long> denominator;      // exponents e of the factors (1 - t^e)

    // Order of the pole at t = 1.
    int pole_order() const {
        if (zpoly::is_zero(numerator)) return 0;
        return static_cast<int>(denominator.size()) - zpoly::multiplicity_at_one(numerator);
    }

    // Equality as rational functions: cross-multiplied numerators agree.
    bool same_series(const HilbertSeries& o) const {
        std::vector<Z> lhs = numerator, rhs = o.numerator;
        for (long e : o.denominator) lhs = zpoly::mul(lhs, zpoly::one_minus_t_pow(e));
        for (long e : denominator) rhs = zpoly::mul(rhs, zpoly::one_minus_t_pow(e));
        zpoly::trim(lhs);
        zpoly::trim(rhs);
        return lhs == rhs;
    }

    // First `count` coefficients of the power-series expansion, i.e. the
    // Hilbert function values HF(0..count-1).
    std::vector<Z> expand(long count) const {
        std::vector<Z> c(numerator.begin(), numerator.end());
        c.resize(std::max<size_t>(count, c.size()), Z(0));
        // multiply by 1/(1-t^e): prefix sums with stride e
        for (long e : denominator)
            for (long i = e; i < count; ++i) c[i] += c[i - e];
        c.resize(count);
        return c;
    }
};

}  // namespace wps

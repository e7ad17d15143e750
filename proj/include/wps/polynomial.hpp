// Sparse multivariate polynomials with exact rational coefficients.
// Terms are stored in a map keyed by exponent vector (lexicographic key
// order), which gives deterministic iteration and serialization independent
// of any monomial order used by the Groebner layer.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wps/errors.hpp"
#include "wps/rational.hpp"
#include "wps/weights.hpp"

namespace wps {

using Monomial = std::vector<int>;  // exponent vector, length n+1

inline long weighted_degree(const Monomial& m, const WeightSystem& W) {
    if (static_cast<int>(m.size()) != W.var_count())
        throw DimensionError("monomial length does not match weight system");
    long d = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) throw DomainError("negative exponent");
        d += static_cast<long>(m[i]) * W.weight(static_cast<int>(i));
    }
    return d;
}

inline long total_degree(const Monomial& m) {
    long d = 0;
    for (int e : m) d += e;
    return d;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw DomainError("monomial division not exact");
    }
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

class Polynomial {
public:
    using TermMap = std::map<Monomial, Q>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, const Q& c) : nvars_(nvars) {
        if (c != 0) terms_[Monomial(nvars, 0)] = c;
    }
    Polynomial(const Monomial& m, const Q& c) : nvars_(static_cast<int>(m.size())) {
        if (c != 0) terms_[m] = c;
    }

    static Polynomial variable(int nvars, int i, int power = 1) {
        Monomial m(nvars, 0);
        m[i] = power;
        return Polynomial(m, Q(1));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Q coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Q(0) : it->second;
    }

    void add_term(const Monomial& m, const Q& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(std::max(a.nvars_, b.nvars_));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }

    Polynomial& operator*=(const Q& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [m, coef] : terms_) coef *= c;
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const Q& c) { return a *= c; }
    friend Polynomial operator*(const Q& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a) { return a *= Q(-1); }

    Polynomial pow(int e) const {
        Polynomial r(nvars_, Q(1));
        Polynomial base = *this;
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

    // Largest monomial in the canonical (lex) key order; for normalization only.
    const Monomial& lex_leading_monomial() const {
        if (is_zero()) throw DomainError("zero polynomial has no leading term");
        return terms_.rbegin()->first;
    }

    // Monic with respect to the canonical key order; used to dedupe up to scalar.
    Polynomial normalized() const {
        if (is_zero()) return *this;
        Q lc = terms_.rbegin()->second;
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c /= lc;
        return r;
    }

    // Common degree of all terms, or nullopt for an inhomogeneous polynomial.
    // Raises on the zero polynomial: its degree is undefined, not a sentinel.
    std::optional<long> homogeneous_degree(const WeightSystem& W) const {
        if (is_zero()) throw DomainError("degree of the zero polynomial is undefined");
        std::optional<long> d;
        for (const auto& [m, c] : terms_) {
            long dm = weighted_degree(m, W);
            if (!d) d = dm;
            else if (*d != dm) return std::nullopt;
        }
        return d;
    }

    // Substitutes values[i] for variable i. R needs +, *, its own pow via
    // repeated multiplication, and construction from Q through `constant`.
    template <class R, class MakeConst>
    R evaluate(const std::vector<R>& values, MakeConst constant) const {
        R acc = constant(Q(0));
        for (const auto& [m, c] : terms_) {
            R term = constant(c);
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) term = term * values[i];
            acc = acc + term;
        }
        return acc;
    }

private:
    int nvars_ = 0;
    TermMap terms_;
};

}  // namespace wps

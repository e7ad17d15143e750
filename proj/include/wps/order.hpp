// Monomial orders. The default is weighted-degree-first with a reverse
// lexicographic tie-break (degree compatibility is what makes leading-term
// Hilbert series correct). A lex tie-break variant exists so tests can
// verify order-independence, and a two-block elimination order drives
// implicitization.
#pragma once

#include <vector>

#include "wps/polynomial.hpp"
#include "wps/weights.hpp"

namespace wps {

struct MonomialOrder {
    enum class Kind { WDegRevLex, WDegLex, Elim };

    Kind kind = Kind::WDegRevLex;
    std::vector<long> var_weights;
    int elim_vars = 0;  // size of the leading (eliminated) block, Elim only

    static MonomialOrder wdegrevlex(const WeightSystem& W) {
        return {Kind::WDegRevLex, W.weights(), 0};
    }
    static MonomialOrder wdeglex(const WeightSystem& W) {
        return {Kind::WDegLex, W.weights(), 0};
    }
    static MonomialOrder elimination(const WeightSystem& W, int leading_block) {
        return {Kind::Elim, W.weights(), leading_block};
    }

    long wdeg(const Monomial& m, size_t from, size_t to) const {
        long d = 0;
        for (size_t i = from; i < to; ++i) d += static_cast<long>(m[i]) * var_weights[i];
        return d;
    }

    // >0 if a > b, <0 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::WDegRevLex:
                return cmp_block_revlex(a, b, 0, a.size());
            case Kind::WDegLex: {
                long da = wdeg(a, 0, a.size()), db = wdeg(b, 0, b.size());
                if (da != db) return da < db ? -1 : 1;
                for (size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                return 0;
            }
            case Kind::Elim: {
                int c = cmp_block_revlex(a, b, 0, static_cast<size_t>(elim_vars));
                if (c != 0) return c;
                return cmp_block_revlex(a, b, static_cast<size_t>(elim_vars), a.size());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    int cmp_block_revlex(const Monomial& a, const Monomial& b, size_t from, size_t to) const {
        long da = wdeg(a, from, to), db = wdeg(b, from, to);
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = to; i-- > from;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // smaller late exponent wins
        return 0;
    }
};

}  // namespace wps

// A minimal Buchberger engine for weighted-homogeneous ideals: reduced
// Groebner bases with Gebauer-Moeller pair pruning, leading-term ideals,
// Krull dimension / codimension, Hilbert-series numerators via the
// pivot-splitting recursion on monomial ideals, and implicitization by block
// elimination. Every computation is exact, deterministic for a fixed input
// and order, and subject to a hard resource budget.
#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wps/errors.hpp"
#include "wps/matrix.hpp"
#include "wps/order.hpp"
#include "wps/polynomial.hpp"
#include "wps/series_types.hpp"
#include "wps/weights.hpp"

namespace wps {

struct GBOptions {
    long max_reductions = 100000;           // S-pair / normal-form reduction cap
    size_t max_term_bytes = 64ull << 20;    // crude live-term storage cap

    // WPS_BUDGET env var (a reduction count) when set; used by the CLI.
    static GBOptions from_env() {
        GBOptions o;
        if (const char* v = std::getenv("WPS_BUDGET")) {
            long n = std::atol(v);
            if (n > 0) o.max_reductions = n;
        }
        return o;
    }
};

namespace detail {

struct MonoGreater {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
};

// Terms in strictly descending order of the active monomial order.
using OPoly = std::map<Monomial, Q, MonoGreater>;

inline OPoly to_opoly(const Polynomial& f, const MonomialOrder& ord) {
    OPoly r{MonoGreater{&ord}};
    for (const auto& [m, c] : f.terms()) r.emplace(m, c);
    return r;
}

inline Polynomial from_opoly(const OPoly& f, int nvars) {
    Polynomial r(nvars);
    for (const auto& [m, c] : f) r.add_term(m, c);
    return r;
}

inline void op_add_term(OPoly& f, const Monomial& m, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = f.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) f.erase(it);
    }
}

// f -= c * m * g
inline void op_sub_mult(OPoly& f, const Q& c, const Monomial& m, const OPoly& g) {
    for (const auto& [mg, cg] : g) op_add_term(f, monomial_mul(m, mg), -c * cg);
}

class Engine {
public:
    Engine(const MonomialOrder& ord, const GBOptions& opt, int nvars)
        : ord_(ord), opt_(opt), nvars_(nvars) {}

    const std::vector<OPoly>& basis() const { return basis_; }

    void run(const std::vector<Polynomial>& gens) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            OPoly f = to_opoly(g, ord_);
            add_element(normal_form_full(std::move(f)));
        }
        while (!pairs_.empty()) {
            auto it = pairs_.begin();
            Pair pr = *it;
            pairs_.erase(it);
            OPoly s = s_poly(basis_[pr.i], basis_[pr.j], pr.lcm);
            add_element(normal_form_full(std::move(s)));
        }
        reduce_basis();
    }

    // Full normal form: reduces every term, not just the lead.
    OPoly normal_form_full(OPoly f) {
        OPoly rem{MonoGreater{&ord_}};
        while (!f.empty()) {
            tick();
            const Monomial lead = f.begin()->first;
            const Q lc = f.begin()->second;
            int k = find_reducer(lead);
            if (k < 0) {
                rem.emplace(lead, lc);
                f.erase(f.begin());
            } else {
                const auto& g = basis_[k];
                Monomial quot = monomial_div(lead, g.begin()->first);
                op_sub_mult(f, lc / g.begin()->second, quot, g);
            }
        }
        return rem;
    }

    long live_terms() const { return live_terms_; }

private:
    struct Pair {
        long deg;
        int i, j;
        Monomial lcm;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (j != o.j) return j < o.j;
            if (i != o.i) return i < o.i;
            return lcm < o.lcm;
        }
    };

    void tick() {
        if (++reductions_ > opt_.max_reductions)
            throw BudgetError("Groebner budget exceeded: more than " +
                              std::to_string(opt_.max_reductions) + " reduction steps");
    }

    void check_storage() {
        size_t per_term = sizeof(Q) + sizeof(Monomial) + nvars_ * sizeof(int) + 48;
        if (static_cast<size_t>(live_terms_) * per_term > opt_.max_term_bytes)
            throw BudgetError("Groebner budget exceeded: term storage cap");
    }

    int find_reducer(const Monomial& m) const {
        for (size_t k = 0; k < basis_.size(); ++k)
            if (alive_[k] && monomial_divides(basis_[k].begin()->first, m))
                return static_cast<int>(k);
        return -1;
    }

    OPoly s_poly(const OPoly& f, const OPoly& g, const Monomial& lcm) {
        OPoly s{MonoGreater{&ord_}};
        op_sub_mult(s, Q(-1) / f.begin()->second, monomial_div(lcm, f.begin()->first), f);
        op_sub_mult(s, Q(1) / g.begin()->second, monomial_div(lcm, g.begin()->first), g);
        return s;
    }

    // Gebauer-Moeller update on arrival of a new basis element.
    void add_element(OPoly h) {
        if (h.empty()) return;
        const int t = static_cast<int>(basis_.size());
        const Monomial lt_h = h.begin()->first;

        // B-criterion: drop old pairs whose lcm is properly covered by lt_h.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Monomial& l = it->lcm;
            if (monomial_divides(lt_h, l) &&
                monomial_lcm(basis_[it->i].begin()->first, lt_h) != l &&
                monomial_lcm(basis_[it->j].begin()->first, lt_h) != l)
                it = pairs_.erase(it);
            else
                ++it;
        }

        // Candidate pairs (i, t): M-criterion then F-criterion then coprimality.
        std::vector<Pair> cand;
        for (int i = 0; i < t; ++i) {
            if (!alive_[i]) continue;
            Monomial l = monomial_lcm(basis_[i].begin()->first, lt_h);
            cand.push_back({ord_.wdeg(l, 0, l.size()), i, t, l});
        }
        std::vector<bool> drop(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (cand[a].lcm != cand[b].lcm && monomial_divides(cand[b].lcm, cand[a].lcm))
                    drop[a] = true;
            }
        for (size_t a = 0; a < cand.size(); ++a) {  // F: keep one per equal lcm
            if (drop[a]) continue;
            for (size_t b = a + 1; b < cand.size(); ++b)
                if (!drop[b] && cand[b].lcm == cand[a].lcm) drop[b] = true;
        }
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            if (monomial_coprime(basis_[cand[a].i].begin()->first, lt_h)) continue;
            pairs_.insert(cand[a]);
        }

        for (int i = 0; i < t; ++i)
            if (alive_[i] && monomial_divides(lt_h, basis_[i].begin()->first)) alive_[i] = false;
        live_terms_ += static_cast<long>(h.size());
        basis_.push_back(std::move(h));
        alive_.push_back(true);
        check_storage();
    }

    // Keep only LT-minimal elements, tail-reduce each against the others, monic.
    void reduce_basis() {
        std::vector<OPoly> kept;
        for (size_t k = 0; k < basis_.size(); ++k)
            if (alive_[k]) kept.push_back(std::move(basis_[k]));
        basis_ = std::move(kept);
        alive_.assign(basis_.size(), true);
        for (size_t k = 0; k < basis_.size(); ++k) {
            OPoly f = std::move(basis_[k]);
            alive_[k] = false;  // reduce against the others only
            basis_[k] = OPoly{MonoGreater{&ord_}};
            f = normal_form_full(std::move(f));
            for (auto& [m, c] : f) c /= f.begin()->second;
            basis_[k] = std::move(f);
            alive_[k] = true;
        }
        std::sort(basis_.begin(), basis_.end(), [&](const OPoly& a, const OPoly& b) {
            return ord_.less(a.begin()->first, b.begin()->first);
        });
    }

    MonomialOrder ord_;
    GBOptions opt_;
    int nvars_;
    std::vector<OPoly> basis_;
    std::vector<bool> alive_;
    std::set<Pair> pairs_;
    long reductions_ = 0;
    long live_terms_ = 0;
};

}  // namespace detail

struct GroebnerBasis {
    Ideal ideal;
    MonomialOrder order;
    std::vector<Polynomial> basis;     // reduced, monic, ascending leading terms
    std::vector<Monomial> lt_ideal;    // minimal generators of the leading-term ideal

    bool is_unit() const {
        return basis.size() == 1 && basis[0].term_count() == 1 &&
               total_degree(basis[0].lex_leading_monomial()) == 0;
    }
};

inline GroebnerBasis groebner(const Ideal& I, const MonomialOrder& ord,
                              const GBOptions& opt = GBOptions{}) {
    detail::Engine eng(ord, opt, I.ambient.var_count());
    eng.run(I.generators);
    GroebnerBasis out{I, ord, {}, {}};
    for (const auto& g : eng.basis()) {
        out.basis.push_back(detail::from_opoly(g, I.ambient.var_count()));
        out.lt_ideal.push_back(g.begin()->first);
    }
    return out;
}

inline GroebnerBasis groebner(const Ideal& I, const GBOptions& opt = GBOptions{}) {
    return groebner(I, MonomialOrder::wdegrevlex(I.ambient), opt);
}

namespace detail {

// Krull dimension of S/(monomial ideal): the largest variable subset meeting
// the support of no generator.
inline int monomial_ideal_dimension(const std::vector<Monomial>& gens, int nvars) {
    for (const auto& g : gens)
        if (total_degree(g) == 0) return -1;  // unit ideal
    std::vector<std::vector<int>> supports;
    for (const auto& g : gens) {
        std::vector<int> s;
        for (int i = 0; i < nvars; ++i)
            if (g[i] > 0) s.push_back(i);
        supports.push_back(s);
    }
    int best = 0;
    std::vector<char> in_set(nvars, 1);
    // depth-first over variable subsets with pruning by remaining count
    std::function<void(int, int)> rec = [&](int var, int chosen) {
        if (chosen + (nvars - var) <= best) return;
        if (var == nvars) {
            best = std::max(best, chosen);
            return;
        }
        // try including var
        in_set[var] = 1;
        bool ok = true;
        for (const auto& s : supports) {
            bool inside = !s.empty();
            for (int v : s)
                if (v > var || !in_set[v]) { inside = false; break; }
            if (inside) { ok = false; break; }
        }
        if (ok) rec(var + 1, chosen + 1);
        in_set[var] = 0;
        rec(var + 1, chosen);
        in_set[var] = 1;
    };
    std::fill(in_set.begin(), in_set.end(), 0);
    rec(0, 0);
    return best;
}

}  // namespace detail

// n+1 minus the Krull dimension of S(w)/I. The unit ideal yields n+1.
inline int codimension(const GroebnerBasis& G) {
    int nvars = G.ideal.ambient.var_count();
    if (G.basis.empty()) return 0;
    int dim = detail::monomial_ideal_dimension(G.lt_ideal, nvars);
    if (dim < 0) return nvars;  // unit ideal, by convention
    return nvars - dim;
}

inline int codimension(const Ideal& I, const GBOptions& opt = GBOptions{}) {
    return codimension(groebner(I, opt));
}

namespace detail {

inline std::vector<Monomial> interreduce_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                  long da = total_degree(a), db = total_degree(b);
                  if (da != db) return da < db;
                  return a < b;
              });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& h : out)
            if (monomial_divides(h, g)) { divisible = true; break; }
        if (!divisible) out.push_back(g);
    }
    return out;
}

// Numerator of HS(S/I) over the full denominator prod_i (1 - t^{w_i}), for a
// monomial ideal. Splitting recursion on a pivot variable, memoized.
class HilbertNumerator {
public:
    explicit HilbertNumerator(const WeightSystem& W) : W_(W) {}

    std::vector<Z> run(std::vector<Monomial> gens) { return go(interreduce_monomials(std::move(gens))); }

private:
    using Key = std::vector<Monomial>;

    std::vector<Z> go(Key gens) {
        if (gens.empty()) return {Z(1)};
        if (total_degree(gens.front()) == 0) return {Z(0)};
        auto hit = memo_.find(gens);
        if (hit != memo_.end()) return hit->second;

        std::vector<Z> result;
        bool coprime = true;
        for (size_t a = 0; a < gens.size() && coprime; ++a)
            for (size_t b = a + 1; b < gens.size() && coprime; ++b)
                if (!monomial_coprime(gens[a], gens[b])) coprime = false;
        if (coprime) {
            result = {Z(1)};
            for (const auto& g : gens) {
                long d = weighted_degree(g, W_);
                std::vector<Z> factor(d + 1, Z(0));
                factor[0] = 1;
                factor[d] = -1;
                result = poly_mul(result, factor);
            }
        } else {
            int pivot = pick_pivot(gens);
            // I + (x_p): keep x_p plus generators free of x_p
            Key plus;
            Monomial xp(W_.var_count(), 0);
            xp[pivot] = 1;
            plus.push_back(xp);
            for (const auto& g : gens)
                if (g[pivot] == 0) plus.push_back(g);
            // I : x_p
            Key colon;
            for (const auto& g : gens) {
                Monomial h = g;
                if (h[pivot] > 0) --h[pivot];
                colon.push_back(h);
            }
            std::vector<Z> a = go(interreduce_monomials(std::move(plus)));
            std::vector<Z> b = go(interreduce_monomials(std::move(colon)));
            long shift = W_.weight(pivot);
            result.assign(std::max(a.size(), b.size() + shift), Z(0));
            for (size_t i = 0; i < a.size(); ++i) result[i] += a[i];
            for (size_t i = 0; i < b.size(); ++i) result[i + shift] += b[i];
            while (result.size() > 1 && result.back() == 0) result.pop_back();
        }
        memo_.emplace(std::move(gens), result);
        return result;
    }

    int pick_pivot(const Key& gens) const {
        int best = -1, best_count = 0;
        for (int v = 0; v < W_.var_count(); ++v) {
            int count = 0;
            for (const auto& g : gens)
                if (g[v] > 0) ++count;
            if (count > best_count) { best_count = count; best = v; }
        }
        return best;
    }

    static std::vector<Z> poly_mul(const std::vector<Z>& a, const std::vector<Z>& b) {
        std::vector<Z> r(a.size() + b.size() - 1, Z(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        return r;
    }

    const WeightSystem& W_;
    std::map<Key, std::vector<Z>> memo_;
};

}  // namespace detail

// Hilbert series of S(w)/I for weighted-homogeneous I, with denominator the
// full product over the ambient weights. Order-independent by construction
// (any degree-compatible order gives the same standard monomials).
inline HilbertSeries hilbert_series(const GroebnerBasis& G) {
    for (const auto& g : G.ideal.generators)
        if (!g.homogeneous_degree(G.ideal.ambient))
            throw DomainError("hilbert_series requires a weighted-homogeneous ideal");
    detail::HilbertNumerator hn(G.ideal.ambient);
    HilbertSeries hs;
    hs.numerator = hn.run(G.lt_ideal);
    for (long w : G.ideal.ambient.weights()) hs.denominator.insert(w);
    return hs;
}

inline HilbertSeries hilbert_series(const Ideal& I, const GBOptions& opt = GBOptions{}) {
    return hilbert_series(groebner(I, opt));
}

// Expected-codimension test: the maximal minors of a p x q matrix (p <= q)
// cut out an arithmetically Cohen-Macaulay scheme iff their codimension is
// q - p + 1 (the Eagon-Northcott complex then resolves the quotient).
inline bool is_CM_determinantal(const GradedMatrix& M, const GBOptions& opt = GBOptions{}) {
    if (M.rows() > M.cols()) throw DimensionError("is_CM_determinantal expects p <= q");
    profile_of(M);  // degree validity
    Ideal I = minors(M, M.rows());
    if (I.is_zero()) return false;
    return codimension(I, opt) == M.cols() - M.rows() + 1;
}

inline bool bivariate_gcd_is_constant(const std::vector<Polynomial>& forms);

// Kernel of the ring map x_i -> image_i(s,t), where image_i is homogeneous of
// degree w_i * e for a common e >= 1 and the images have no common factor.
// Computed by a two-block elimination of (s,t) from the graph ideal.
inline Ideal implicitize(const std::vector<Polynomial>& images, const WeightSystem& W,
                         const GBOptions& opt = GBOptions{}) {
    if (static_cast<int>(images.size()) != W.var_count())
        throw DimensionError("one image per target variable required");
    WeightSystem st({1, 1}, {"s", "t"});
    long e = -1;
    for (int i = 0; i < W.var_count(); ++i) {
        if (images[i].is_zero()) throw DomainError("zero image");
        auto d = images[i].homogeneous_degree(st);
        if (!d) throw DomainError("image " + std::to_string(i) + " is not homogeneous");
        if (*d % W.weight(i) != 0)
            throw DomainError("image degree not a multiple of the target weight");
        long ei = *d / W.weight(i);
        if (e == -1) e = ei;
        if (ei != e) throw DomainError("images have inconsistent degrees");
    }
    if (e < 1) throw DomainError("base degree must be at least 1");
    if (!bivariate_gcd_is_constant(images))
        throw DomainError("basepoint detected: images share a common factor");

    std::vector<long> big_w = {1, 1};
    std::vector<std::string> big_names = {"s", "t"};
    for (int i = 0; i < W.var_count(); ++i) {
        big_w.push_back(W.weight(i) * e);
        big_names.push_back(W.name(i));
    }
    WeightSystem B(big_w, big_names);
    std::vector<Polynomial> gens;
    for (int i = 0; i < W.var_count(); ++i) {
        Polynomial g = Polynomial::variable(B.var_count(), 2 + i);
        for (const auto& [m, c] : images[i].terms()) {
            Monomial big(B.var_count(), 0);
            big[0] = m[0];
            big[1] = m[1];
            g.add_term(big, -c);
        }
        gens.push_back(g);
    }
    GroebnerBasis G = groebner(Ideal(B, gens), MonomialOrder::elimination(B, 2), opt);
    std::vector<Polynomial> kept;
    for (const auto& f : G.basis) {
        bool uses_st = false;
        Polynomial small(W.var_count());
        for (const auto& [m, c] : f.terms()) {
            if (m[0] > 0 || m[1] > 0) { uses_st = true; break; }
            small.add_term(Monomial(m.begin() + 2, m.end()), c);
        }
        if (!uses_st) kept.push_back(small);
    }
    return Ideal(W, kept);
}

// gcd over Q[s,t] of homogeneous bivariate forms, via the dehomogenization
// u = s/t plus explicit t-power bookkeeping. Returns true iff constant.
inline bool bivariate_gcd_is_constant(const std::vector<Polynomial>& forms) {
    long common_s = -1, common_t = -1;  // common pure powers
    std::vector<std::vector<Q>> dehom;  // in u = s (t := 1), lowest degree first
    for (const auto& f : forms) {
        long min_s = -1, min_t = -1, max_s = 0;
        for (const auto& [m, c] : f.terms()) {
            min_s = min_s < 0 ? m[0] : std::min<long>(min_s, m[0]);
            min_t = min_t < 0 ? m[1] : std::min<long>(min_t, m[1]);
            max_s = std::max<long>(max_s, m[0]);
        }
        common_s = common_s < 0 ? min_s : std::min(common_s, min_s);
        common_t = common_t < 0 ? min_t : std::min(common_t, min_t);
        std::vector<Q> u(max_s + 1, Q(0));
        for (const auto& [m, c] : f.terms()) u[m[0]] = c;
        dehom.push_back(std::move(u));
    }
    if (common_s > 0 || common_t > 0) return false;
    // univariate gcd over Q by Euclid
    auto degree = [](const std::vector<Q>& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1l;
    };
    auto rem = [&](std::vector<Q> a, const std::vector<Q>& b) {
        long db = degree(b);
        for (long da = degree(a); da >= db && da >= 0; da = degree(a)) {
            Q f = a[da] / b[db];
            for (long i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        }
        return a;
    };
    std::vector<Q> g = dehom[0];
    for (size_t k = 1; k < dehom.size() && degree(g) > 0; ++k) {
        std::vector<Q> a = g, b = dehom[k];
        while (degree(b) >= 0) {
            auto r = rem(a, b);
            a = b;
            b = r;
        }
        g = a;
    }
    return degree(g) == 0;
}

}  // namespace wps

#pragma once

// Rewriting Weyl-invariant theta-polynomials in the invariant-ring generators
// of each type:
//   A_{n-1}: elementary symmetric e_2..e_n (e_1 killed by the trace constraint)
//   B_n/C_n: sbar_i = e_i(theta^2)
//   D_n:     sbar_1..sbar_{n-1} and t = th1*...*thn, with sbar_n = t^2
//   G2:      g2 = e_2, g6 = e_3^2 under sum(theta) = 0
//
// The workhorse is the classical Gauss-style algorithm for symmetric
// polynomials: subtract c * prod e_i^(a_i - a_{i+1}) at the lex-leading
// theta-exponent vector until nothing is left.  Coefficients may involve
// other variables (the symbolic weight coordinates l_i); they ride along
// untouched.  Invariance of the input is verified, never assumed.

#include <map>
#include <vector>

#include "polynomial.hpp"
#include "root_system.hpp"

namespace liechar {

// e_k(th_1..th_n), the elementary symmetric polynomial
inline MultiPoly elementary_symmetric(int k, int n) {
    if (k == 0) return MultiPoly::constant(1);
    if (k < 0 || k > n) return MultiPoly::zero();
    // run over k-subsets by a simple odometer
    MultiPoly r;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    for (;;) {
        Monomial m;
        for (int i : idx) m.factors.emplace_back(theta_var(i), 1);
        r.add_term(m, 1);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return r;
}

// image of p under the permutation theta_i -> theta_{perm[i-1]}
inline MultiPoly permute_thetas(const MultiPoly& p, const std::vector<int>& perm) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial im;
        for (const auto& [v, e] : m.factors) {
            if (var_kind(v) == VarKind::Theta) {
                const int i = static_cast<int>(var_index(v));
                im = im.times(Monomial::var(theta_var(perm[i - 1]), e));
            } else {
                im = im.times(Monomial::var(v, e));
            }
        }
        r.add_term(im, c);
    }
    return r;
}

// first adjacent transposition (i, i+1) that fails to fix p, or 0
inline int symmetric_violation(const MultiPoly& p, int n) {
    std::vector<int> perm(n);
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < n; ++j) perm[j] = j + 1;
        std::swap(perm[i - 1], perm[i]);
        if (permute_thetas(p, perm) != p) return i;
    }
    return 0;
}

namespace detail {

struct ThetaLexLess {
    // graded lex on dense exponent vectors, th1 most significant
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// split p into (theta-exponent vector) -> (coefficient in the other variables)
inline std::map<std::vector<int>, MultiPoly, ThetaLexLess> group_by_theta(const MultiPoly& p, int n) {
    std::map<std::vector<int>, MultiPoly, ThetaLexLess> grouped;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exps(n, 0);
        Monomial rest;
        for (const auto& [v, e] : m.factors) {
            if (var_kind(v) == VarKind::Theta) {
                const auto i = var_index(v);
                if (static_cast<int>(i) > n)
                    throw Error("theta index exceeds the declared variable count");
                exps[i - 1] = e;
            } else {
                rest.factors.emplace_back(v, e);
            }
        }
        grouped[std::move(exps)].add_term(rest, c);
    }
    for (auto it = grouped.begin(); it != grouped.end();)
        it = it->second.is_zero() ? grouped.erase(it) : std::next(it);
    return grouped;
}

// cache of expansions of prod_i e_i^{b_i} in theta
class EPowerCache {
public:
    // es_ is pre-sized so references from elementary() survive nested calls
    explicit EPowerCache(int n) : n_(n), es_(n + 1) {}

    const MultiPoly& expansion(const std::vector<int>& b) {
        auto it = cache_.find(b);
        if (it != cache_.end()) return it->second;
        MultiPoly val;
        bool trivial = true;
        for (int x : b) trivial = trivial && x == 0;
        if (trivial) {
            val = MultiPoly::constant(1);
        } else {
            auto smaller = b;
            int i = 0;
            while (smaller[i] == 0) ++i;
            --smaller[i];
            val = expansion(smaller) * elementary(i + 1);
        }
        return cache_.emplace(b, std::move(val)).first->second;
    }

private:
    const MultiPoly& elementary(int k) {
        if (es_[k].is_zero()) es_[k] = elementary_symmetric(k, n_);
        return es_[k];
    }
    int n_;
    std::map<std::vector<int>, MultiPoly> cache_;
    std::vector<MultiPoly> es_;
};

} // namespace detail

// symmetric p in th1..thn  ->  polynomial in e_1..e_n
inline MultiPoly reduce_symmetric(const MultiPoly& p, int n) {
    if (const int i = symmetric_violation(p, n))
        throw NotSymmetric(i);
    auto grouped = detail::group_by_theta(p, n);
    detail::EPowerCache cache(n);
    MultiPoly result;
    while (!grouped.empty()) {
        auto lead = std::prev(grouped.end());
        const std::vector<int>& a = lead->first;
        const MultiPoly coeff = lead->second;
        std::vector<int> b(n);
        for (int i = 0; i < n; ++i) {
            b[i] = a[i] - (i + 1 < n ? a[i + 1] : 0);
            if (b[i] < 0)
                throw Error("leading theta-exponents are not weakly decreasing; input cannot be symmetric");
        }
        Monomial em;
        for (int i = 0; i < n; ++i)
            if (b[i] > 0) em.factors.emplace_back(e_var(i + 1), b[i]);
        for (const auto& [m, c] : coeff.terms())
            result.add_term(m.times(em), c);
        // subtract coeff * expansion(b), regrouped by theta part
        for (const auto& [m, c] : cache.expansion(b).terms()) {
            std::vector<int> exps(n, 0);
            for (const auto& [v, e] : m.factors) exps[var_index(v) - 1] = e;
            auto it = grouped.find(exps);
            if (it == grouped.end()) it = grouped.emplace(exps, MultiPoly::zero()).first;
            for (const auto& [cm, cc] : coeff.terms()) it->second.add_term(cm, -cc * c);
            if (it->second.is_zero()) grouped.erase(it);
        }
    }
    return result;
}

// S_n-invariant and sign-flip-invariant p  ->  polynomial in sbar_1..sbar_n
inline MultiPoly reduce_bc(const MultiPoly& p, int n) {
    if (const int i = symmetric_violation(p, n))
        throw NotInvariant("not symmetric under the transposition (" + std::to_string(i) + " " +
                           std::to_string(i + 1) + ")");
    MultiPoly halved;
    for (const auto& [m, c] : p.terms()) {
        Monomial hm;
        for (const auto& [v, e] : m.factors) {
            if (var_kind(v) == VarKind::Theta) {
                if (e % 2 != 0)
                    throw NotInvariant("odd exponent of " + VarNames{}.text(v) +
                                       "; input is not invariant under sign flips");
                hm.factors.emplace_back(v, e / 2);
            } else {
                hm.factors.emplace_back(v, e);
            }
        }
        halved.add_term(hm, c);
    }
    const MultiPoly in_e = reduce_symmetric(halved, n);
    // rename e_i -> sbar_i
    MultiPoly out;
    for (const auto& [m, c] : in_e.terms()) {
        Monomial rm;
        for (const auto& [v, e] : m.factors)
            rm.factors.emplace_back(var_kind(v) == VarKind::E ? sbar_var(var_index(v)) : v, e);
        out.add_term(rm, c);
    }
    return out;
}

// S_n-invariant, even-sign-flip-invariant p  ->  polynomial in
// sbar_1..sbar_{n-1} and t
inline MultiPoly reduce_d(const MultiPoly& p, int n) {
    MultiPoly even_part, odd_part;  // odd_part collects monomials with every theta-exponent odd
    for (const auto& [m, c] : p.terms()) {
        int n_even = 0, n_odd = 0;
        for (int i = 1; i <= n; ++i)
            (m.exponent(theta_var(i)) % 2 == 0 ? n_even : n_odd)++;
        if (n_even == n) {
            even_part.add_term(m, c);
        } else if (n_odd == n) {
            Monomial q;  // divide by th1*...*thn
            for (const auto& [v, e] : m.factors) {
                const int drop = var_kind(v) == VarKind::Theta ? 1 : 0;
                if (e - drop > 0) q.factors.emplace_back(v, e - drop);
            }
            odd_part.add_term(q, c);
        } else {
            throw MixedParity("monomial " + MultiPoly::term(m, c).text() +
                              " mixes even and odd theta-exponents");
        }
    }
    MultiPoly out = reduce_bc(even_part, n) + reduce_bc(odd_part, n) * MultiPoly::variable(t_var());
    // sbar_n = t^2
    MultiPoly rewritten;
    for (const auto& [m, c] : out.terms()) {
        Monomial rm;
        for (const auto& [v, e] : m.factors) {
            if (v == sbar_var(n)) {
                rm = rm.times(Monomial::var(t_var(), 2 * e));
            } else {
                rm = rm.times(Monomial::var(v, e));
            }
        }
        rewritten.add_term(rm, c);
    }
    return rewritten;
}

// S_3-invariant, globally even p in th1..th3  ->  polynomial in g2, g6,
// working modulo the constraint th1+th2+th3 = 0
inline MultiPoly reduce_g2(const MultiPoly& p) {
    for (const auto& [m, c] : p.terms()) {
        int tdeg = 0;
        for (int i = 1; i <= 3; ++i) tdeg += m.exponent(theta_var(i));
        if (tdeg % 2 != 0)
            throw NotInvariant("odd total theta-degree; input is not even under theta -> -theta");
    }
    MultiPoly in_e;
    try {
        in_e = reduce_symmetric(p, 3);
    } catch (const NotSymmetric& ns) {
        throw NotInvariant("not symmetric under the transposition (" + std::to_string(ns.index) +
                           " " + std::to_string(ns.index + 1) + ")");
    }
    MultiPoly out;
    for (const auto& [m, c] : in_e.terms()) {
        if (m.exponent(e_var(1)) > 0) continue;  // e_1 = 0 on the trace-zero locus
        const int e3 = m.exponent(e_var(3));
        if (e3 % 2 != 0) throw OddE3();
        Monomial rm;
        for (const auto& [v, e] : m.factors) {
            if (v == e_var(2)) rm = rm.times(Monomial::var(g_var(2), e));
            else if (v == e_var(3)) rm = rm.times(Monomial::var(g_var(6), e / 2));
            else rm = rm.times(Monomial::var(v, e));
        }
        out.add_term(rm, c);
    }
    return out;
}

// ---------------------------------------------------------------------------

struct GeneratorSet {
    LieType lie_type;
    std::vector<Var> generators;
    std::map<Var, MultiPoly> theta_definitions;
    std::map<Var, int> weighted_degree;  // theta-degree carried by each generator
};

inline GeneratorSet generator_set(LieType t) {
    GeneratorSet g;
    g.lie_type = t;
    const int n = t.rank;
    auto add = [&](Var v, MultiPoly def, int wdeg) {
        g.generators.push_back(v);
        g.theta_definitions.emplace(v, std::move(def));
        g.weighted_degree.emplace(v, wdeg);
    };
    switch (t.family) {
        case Family::A:
            for (int i = 2; i <= n + 1; ++i) add(e_var(i), elementary_symmetric(i, n + 1), i);
            break;
        case Family::B:
        case Family::C: {
            for (int i = 1; i <= n; ++i) {
                MultiPoly def;
                const MultiPoly ei = elementary_symmetric(i, n);
                for (const auto& [m, c] : ei.terms()) {
                    Monomial sq;
                    for (const auto& [v, e] : m.factors) sq.factors.emplace_back(v, 2 * e);
                    def.add_term(sq, c);
                }
                add(sbar_var(i), std::move(def), 2 * i);
            }
            break;
        }
        case Family::D: {
            for (int i = 1; i < n; ++i) {
                MultiPoly def;
                const MultiPoly ei = elementary_symmetric(i, n);
                for (const auto& [m, c] : ei.terms()) {
                    Monomial sq;
                    for (const auto& [v, e] : m.factors) sq.factors.emplace_back(v, 2 * e);
                    def.add_term(sq, c);
                }
                add(sbar_var(i), std::move(def), 2 * i);
            }
            Monomial prod;
            for (int i = 1; i <= n; ++i) prod.factors.emplace_back(theta_var(i), 1);
            add(t_var(), MultiPoly::term(prod, 1), n);
            break;
        }
        case Family::G: {
            add(g_var(2), elementary_symmetric(2, 3), 2);
            add(g_var(6), elementary_symmetric(3, 3) * elementary_symmetric(3, 3), 6);
            break;
        }
    }
    return g;
}

// dispatch to the type's reducer (n thetas implied by the type)
inline MultiPoly reduce_invariant(LieType t, const MultiPoly& p) {
    switch (t.family) {
        case Family::A: {
            MultiPoly r = reduce_symmetric(p, t.rank + 1);
            // e_1 = 0 under the trace constraint
            MultiPoly out;
            for (const auto& [m, c] : r.terms())
                if (m.exponent(e_var(1)) == 0) out.add_term(m, c);
            return out;
        }
        case Family::B:
        case Family::C: return reduce_bc(p, t.rank);
        case Family::D: return reduce_d(p, t.rank);
        case Family::G: return reduce_g2(p);
    }
    throw InvalidType("no reducer for this type");
}

} // namespace liechar

#pragma once

// Orbital factors and the assembled characteristic polynomial.
//
// f_mu = prod over the Weyl orbit of mu of (z0 + v(w, theta)), expanded,
// symmetrized where only the restriction to the trace-zero locus is invariant
// (types A and G2), and rewritten in the invariant-ring generators.  The full
// polynomial of a module is the product of orbital factors with the weight
// multiplicities as exponents; f_lambda can also be recovered by dividing the
// product over all weights by the factors of the strictly smaller dominant
// weights, which cross-checks multiplicities, orbit data and reduction.
//
// The expansion engine keeps the product coefficient-wise by z0-degree: slot k
// holds the theta-homogeneous coefficient of z0^(m-k) after m linear factors.
// Multiplying by (z0 + v) is then slot[k] += v * slot[k-1], processed top
// down, and a division that only needs the quotient can restrict to the top
// |O_lambda|+1 slots (both sides are monic in z0, so those slots determine
// the quotient completely).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_map>
#include <vector>

#include "eigen_map.hpp"
#include "invariant_reduce.hpp"
#include "weight_system.hpp"

namespace liechar {

struct OrbitalFactor {
    LieType lie_type;
    Weight mu;           // the queried dominant weight (coordinate pattern in symbolic mode)
    MultiPoly poly;      // monic in z0, coefficients in the type's generators (and l_i when symbolic)
    int degree = 0;      // equals the orbit size
};

namespace detail {

// theta-coefficient matrix of the scheme: row i = coefficients of c_i
inline std::vector<std::vector<Rational>> scheme_matrix(const EigenCoordinateScheme& s) {
    std::vector<std::vector<Rational>> m;
    for (const auto& form : s.cartan_forms) {
        std::vector<Rational> row(s.num_thetas, 0);
        for (const auto& [mono, c] : form.terms())
            row[var_index(mono.factors.at(0).first) - 1] = c;
        m.push_back(std::move(row));
    }
    return m;
}

// sparse accumulator for products of (z0 + linear form in theta), keyed by
// packed theta exponents (12 bits each); slot index = total theta degree
class ThetaSlots {
public:
    ThetaSlots(int nthetas, int window) : n_(nthetas), window_(window), slots_(1) {
        slots_[0].emplace(0u, Rational(1));
    }

    int factors_so_far() const { return count_; }
    int used_slots() const { return static_cast<int>(slots_.size()); }

    void mul_linear(const std::vector<Rational>& coeff) {
        if (static_cast<int>(slots_.size()) < window_) slots_.emplace_back();
        for (int k = static_cast<int>(slots_.size()) - 1; k >= 1; --k) {
            for (const auto& [key, c] : slots_[k - 1]) {
                for (int j = 0; j < n_; ++j) {
                    if (coeff[j] == 0) continue;
                    auto& dst = slots_[k][key + (std::uint64_t(1) << (12 * j))];
                    dst += c * coeff[j];
                    if (dst == 0) slots_[k].erase(key + (std::uint64_t(1) << (12 * j)));
                }
            }
        }
        ++count_;
    }

    // average over theta-permutations given as 1-based images
    void average(const std::vector<std::vector<int>>& perms) {
        const Rational inv(1, static_cast<int>(perms.size()));
        for (auto& slot : slots_) {
            std::unordered_map<std::uint64_t, Rational> acc;
            acc.reserve(slot.size());
            for (const auto& perm : perms) {
                for (const auto& [key, c] : slot) {
                    std::uint64_t image = 0;
                    for (int j = 0; j < n_; ++j)
                        image += ((key >> (12 * j)) & 0xfffu) << (12 * (perm[j] - 1));
                    acc[image] += c;
                }
            }
            slot.clear();
            for (auto& [key, c] : acc) {
                c *= inv;
                if (c != 0) slot.emplace(key, std::move(c));
            }
        }
    }

    MultiPoly slot_poly(int k) const {
        MultiPoly p;
        if (k >= static_cast<int>(slots_.size())) return p;
        for (const auto& [key, c] : slots_[k]) {
            Monomial m;
            for (int j = 0; j < n_; ++j) {
                const int e = static_cast<int>((key >> (12 * j)) & 0xfffu);
                if (e > 0) m.factors.emplace_back(theta_var(j + 1), e);
            }
            p.add_term(m, c);
        }
        return p;
    }

private:
    int n_;
    int window_;
    int count_ = 0;
    std::vector<std::unordered_map<std::uint64_t, Rational>> slots_;
};

// coset representatives whose images average an S_{n-1}- (type A) or
// <(1 3)>- (G2) invariant polynomial to a fully symmetric one
inline std::vector<std::vector<int>> averaging_perms(LieType t, int nthetas) {
    std::vector<std::vector<int>> perms;
    auto identity = [&] {
        std::vector<int> p(nthetas);
        for (int i = 0; i < nthetas; ++i) p[i] = i + 1;
        return p;
    };
    if (t.family == Family::A) {
        for (int k = 1; k <= nthetas; ++k) {
            auto p = identity();
            std::swap(p[k - 1], p[nthetas - 1]);
            perms.push_back(std::move(p));
        }
    } else if (t.family == Family::G) {
        perms.push_back(identity());
        auto p12 = identity();
        std::swap(p12[0], p12[1]);
        perms.push_back(std::move(p12));
        auto p23 = identity();
        std::swap(p23[1], p23[2]);
        perms.push_back(std::move(p23));
    }
    return perms;  // empty for B/C/D: their products are exactly invariant
}

// reduce every slot to generator variables; slot k belongs to z0^(deg - k)
inline std::vector<MultiPoly> reduced_slots(LieType t, ThetaSlots& slots, int used) {
    const auto perms = averaging_perms(t, t.family == Family::A ? t.rank + 1 : (t.family == Family::G ? 3 : t.rank));
    if (!perms.empty()) slots.average(perms);
    std::vector<MultiPoly> out;
    for (int k = 0; k < used; ++k) out.push_back(reduce_invariant(t, slots.slot_poly(k)));
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------

inline OrbitalFactor orbital_factor(const RootSystem& rs, const Weight& mu) {
    if (!mu.is_dominant()) throw NotDominant("orbital factors are indexed by dominant weights, got " + mu.str());
    const auto s = scheme(rs.lie_type);
    const auto coeff = detail::scheme_matrix(s);
    const auto o = orbit(rs, mu);
    const int deg = static_cast<int>(o.size());

    detail::ThetaSlots slots(s.num_thetas, deg + 1);
    std::vector<Rational> v(s.num_thetas);
    for (const auto& w : o.elements) {
        std::fill(v.begin(), v.end(), Rational(0));
        for (int i = 0; i < rs.rank(); ++i) {
            if (w[i] == 0) continue;
            for (int j = 0; j < s.num_thetas; ++j) v[j] += Rational(w[i]) * coeff[i][j];
        }
        slots.mul_linear(v);
    }
    auto red = detail::reduced_slots(rs.lie_type, slots, deg + 1);

    OrbitalFactor f;
    f.lie_type = rs.lie_type;
    f.mu = mu;
    f.degree = deg;
    for (int k = 0; k <= deg; ++k) {
        if (red[k].is_zero()) continue;
        f.poly += MultiPoly::variable(z0_var(), deg - k) * red[k];
    }
    return f;
}

// Symbolic weights: integer matrices whose row i holds the l-coefficients of
// coordinate i, so a generic dominant weight (l1, 0, l3) is rows of an
// identity with the zero pattern applied.
using SymbolicWeight = std::vector<std::vector<int>>;

// orbit of the generic weight with the given zero pattern, by reflection BFS
inline std::vector<SymbolicWeight> symbolic_orbit(const RootSystem& rs, const Weight& pattern) {
    if (!pattern.is_dominant()) throw NotDominant("orbits are indexed by dominant weights, got " + pattern.str());
    const int n = rs.rank();
    SymbolicWeight start(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        if (pattern[i] != 0) start[i][i] = 1;

    std::set<SymbolicWeight> seen{start};
    std::vector<SymbolicWeight> elements{start};
    std::deque<SymbolicWeight> queue{start};
    while (!queue.empty()) {
        const SymbolicWeight cur = queue.front();
        queue.pop_front();
        for (int g = 0; g < n; ++g) {
            SymbolicWeight next = cur;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) next[j][k] -= rs.cartan[g][j] * cur[g][k];
            if (seen.insert(next).second) {
                elements.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return elements;
}

// v(w, theta) with symbolic coordinates: sum_i c_i(theta) * (sum_k w_ik l_k)
inline MultiPoly symbolic_eigen_form(const EigenCoordinateScheme& s, const SymbolicWeight& w) {
    MultiPoly v;
    for (std::size_t i = 0; i < w.size(); ++i) {
        MultiPoly li;
        for (std::size_t k = 0; k < w[i].size(); ++k)
            if (w[i][k] != 0) li += MultiPoly::variable(l_var(static_cast<int>(k) + 1)) * Rational(w[i][k]);
        if (!li.is_zero()) v += s.cartan_forms[i] * li;
    }
    return v;
}

// Symbolic variant: each nonzero coordinate of the pattern becomes the symbol
// l_i, so (1,0) yields the one-parameter family of factors for l1*beta1.
inline OrbitalFactor orbital_factor_symbolic(const RootSystem& rs, const Weight& pattern) {
    const auto s = scheme(rs.lie_type);
    const auto elements = symbolic_orbit(rs, pattern);

    MultiPoly prod = MultiPoly::constant(1);
    for (const auto& w : elements)
        prod *= MultiPoly::variable(z0_var()) + symbolic_eigen_form(s, w);

    const auto perms = detail::averaging_perms(rs.lie_type, s.num_thetas);
    if (!perms.empty()) {
        MultiPoly avg;
        for (const auto& perm : perms) avg += permute_thetas(prod, perm);
        prod = avg * Rational(1, static_cast<int>(perms.size()));
    }

    OrbitalFactor f;
    f.lie_type = rs.lie_type;
    f.mu = pattern;
    f.degree = static_cast<int>(elements.size());
    for (int d = 0; d <= f.degree; ++d) {
        const MultiPoly c = reduce_invariant(rs.lie_type, prod.coefficient_of(z0_var(), d));
        if (!c.is_zero()) f.poly += MultiPoly::variable(z0_var(), d) * c;
    }
    return f;
}

// ---------------------------------------------------------------------------

struct FactoredCharPoly {
    std::vector<Weight> highest_weights;
    std::vector<std::pair<OrbitalFactor, Integer>> factors;  // factor, multiplicity

    Integer total_degree() const {
        Integer d = 0;
        for (const auto& [f, m] : factors) d += Integer(f.degree) * m;
        return d;
    }

    MultiPoly expand() const {
        MultiPoly p = MultiPoly::constant(1);
        for (const auto& [f, m] : factors) p *= f.poly.pow(static_cast<int>(m));
        return p;
    }
};

// factored characteristic polynomial of a direct sum of irreducible modules
inline FactoredCharPoly assemble(const RootSystem& rs, const std::vector<Weight>& highest) {
    FactoredCharPoly out;
    out.highest_weights = highest;
    std::map<Weight, Integer> mult;
    Integer dim_sum = 0;
    std::vector<Weight> order;  // first-seen order across summands
    for (const auto& lambda : highest) {
        const auto ch = character_by_orbit(rs, lambda);
        dim_sum += ch.dimension;
        for (const auto& e : ch.entries) {
            if (mult.emplace(e.dominant_weight, 0).second) order.push_back(e.dominant_weight);
            mult[e.dominant_weight] += e.multiplicity;
        }
    }
    Integer degree_check = 0;
    for (const auto& w : order) {
        auto f = orbital_factor(rs, w);
        degree_check += Integer(f.degree) * mult.at(w);
        out.factors.emplace_back(std::move(f), mult.at(w));
    }
    if (degree_check != dim_sum)
        throw Error("factor degrees sum to " + degree_check.str() + ", expected dimension " + dim_sum.str());
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

// largest module dimension expanded in full before dividing; beyond it the
// engine keeps only the top slots needed to pin down the quotient
inline int full_expansion_cap(int nthetas) {
    if (nthetas <= 2) return 150;
    if (nthetas == 3) return 110;
    return 70;
}

// top-window slices of a product of monic z0-polynomials; slice j of a factor
// f of degree d is the coefficient of z0^(d-j)
inline std::vector<MultiPoly> sliced_product(const std::vector<std::pair<const MultiPoly*, int>>& factors,
                                             int window) {
    std::vector<MultiPoly> cur{MultiPoly::constant(1)};
    for (const auto& [poly, copies] : factors) {
        const int d = poly->degree_in(z0_var());
        std::vector<MultiPoly> slices;
        for (int j = 0; j < window && j <= d; ++j) slices.push_back(poly->coefficient_of(z0_var(), d - j));
        for (int c = 0; c < copies; ++c) {
            std::vector<MultiPoly> next(std::min<std::size_t>(window, cur.size() + slices.size() - 1));
            for (std::size_t a = 0; a < cur.size(); ++a) {
                if (cur[a].is_zero()) continue;
                for (std::size_t b = 0; b < slices.size() && a + b < next.size(); ++b)
                    next[a + b] += cur[a] * slices[b];
            }
            cur = std::move(next);
        }
    }
    return cur;
}

} // namespace detail

// Recover f_lambda as (product over all weights of V(lambda)) divided by the
// factors of the strictly smaller dominant weights.  Full expansion with true
// exact division below the size cap; top-window division above it.
inline OrbitalFactor factor_by_division(const RootSystem& rs, const Weight& lambda) {
    const auto ch = character_by_orbit(rs, lambda);
    const auto s = scheme(rs.lie_type);
    const auto coeff = detail::scheme_matrix(s);
    const int dim_v = static_cast<int>(ch.dimension);
    const Integer orbit_lambda = rs.weyl_order / stabilizer_order(rs, lambda);
    const int deg_q = static_cast<int>(orbit_lambda);
    const bool full = dim_v <= detail::full_expansion_cap(s.num_thetas);
    const int window = full ? dim_v + 1 : deg_q + 1;

    detail::ThetaSlots slots(s.num_thetas, window);
    std::vector<Rational> v(s.num_thetas);
    for (const auto& entry : ch.entries) {
        const auto o = orbit(rs, entry.dominant_weight);
        for (const auto& w : o.elements) {
            std::fill(v.begin(), v.end(), Rational(0));
            for (int i = 0; i < rs.rank(); ++i) {
                if (w[i] == 0) continue;
                for (int j = 0; j < s.num_thetas; ++j) v[j] += Rational(w[i]) * coeff[i][j];
            }
            for (Integer m = 0; m < entry.multiplicity; ++m) slots.mul_linear(v);
        }
    }
    auto num_slices = detail::reduced_slots(rs.lie_type, slots, std::min(window, slots.used_slots()));

    // orbital factors of the strictly smaller dominant weights; fill the
    // vector completely before taking pointers into it
    std::vector<OrbitalFactor> smaller;
    std::vector<int> copies;
    for (const auto& entry : ch.entries) {
        if (entry.dominant_weight == lambda) continue;
        smaller.push_back(orbital_factor(rs, entry.dominant_weight));
        copies.push_back(static_cast<int>(entry.multiplicity));
    }
    std::vector<std::pair<const MultiPoly*, int>> gparts;
    for (std::size_t i = 0; i < smaller.size(); ++i)
        gparts.emplace_back(&smaller[i].poly, copies[i]);

    OrbitalFactor f;
    f.lie_type = rs.lie_type;
    f.mu = lambda;
    f.degree = deg_q;

    if (full) {
        MultiPoly numerator;
        for (int k = 0; k < static_cast<int>(num_slices.size()); ++k)
            numerator += MultiPoly::variable(z0_var(), dim_v - k) * num_slices[k];
        MultiPoly g = MultiPoly::constant(1);
        for (const auto& [poly, copies] : gparts) g *= poly->pow(copies);
        f.poly = exact_div(numerator, g);
    } else {
        const auto gsl = detail::sliced_product(gparts, window);
        std::vector<MultiPoly> q(window);
        for (int j = 0; j < window; ++j) {
            MultiPoly acc = j < static_cast<int>(num_slices.size()) ? num_slices[j] : MultiPoly::zero();
            for (int i = 1; i <= j; ++i) {
                if (i >= static_cast<int>(gsl.size()) || gsl[i].is_zero() || q[j - i].is_zero()) continue;
                acc -= gsl[i] * q[j - i];
            }
            q[j] = std::move(acc);
        }
        for (int j = 0; j < window; ++j)
            if (!q[j].is_zero()) f.poly += MultiPoly::variable(z0_var(), deg_q - j) * q[j];
    }
    return f;
}

// ---------------------------------------------------------------------------

// f = z0^{d_0} * prod_{k>=1} (z0^2 - k^2 (z11^2 + z12 z21))^{d_k} for a
// rank-1 module with weight multiplicities d; the quadratic is -e2 written in
// the entries of the generic traceless 2x2 matrix
inline MultiPoly sl2_closed_form(const std::vector<Integer>& d) {
    MultiPoly w = MultiPoly::variable(entry_var(1, 1), 2) +
                  MultiPoly::variable(entry_var(1, 2)) * MultiPoly::variable(entry_var(2, 1));
    MultiPoly f = d.empty() ? MultiPoly::constant(1)
                            : MultiPoly::variable(z0_var(), static_cast<int>(d[0]));
    for (std::size_t k = 1; k < d.size(); ++k) {
        if (d[k] == 0) continue;
        const MultiPoly base = MultiPoly::variable(z0_var(), 2) - w * Rational(static_cast<int>(k * k));
        f *= base.pow(static_cast<int>(d[k]));
    }
    return f;
}

} // namespace liechar

#pragma once

// Weight systems of irreducible highest-weight modules: the dominant weights
// below a highest weight, their multiplicities by Freudenthal's recursion,
// the Weyl dimension formula, and the formal character grouped by orbit.
//
// Multiplicities are constant on Weyl orbits, so everything is stored per
// dominant weight; non-dominant weights are looked up through their dominant
// representative.

#include <algorithm>
#include <map>
#include <vector>

#include "weyl_orbit.hpp"

namespace liechar {

namespace detail {

// height of a weight-lattice element: the coefficient sum in the alpha basis
inline Rational alpha_height(const RootSystem& rs, const std::vector<int>& fund_coords) {
    Rational h = 0;
    const int n = rs.rank();
    for (int j = 0; j < n; ++j) {
        if (fund_coords[j] == 0) continue;
        for (int k = 0; k < n; ++k) h += Rational(fund_coords[j]) * rs.fund_in_simple[j][k];
    }
    return h;
}

inline Weight add_scaled(const Weight& a, int k, const Weight& b) {
    Weight r = a;
    for (int i = 0; i < r.rank(); ++i) r[i] += k * b[i];
    return r;
}

} // namespace detail

inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw NotDominant("highest weight must be dominant, got " + lambda.str());
    std::set<Weight> seen{lambda};
    std::vector<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight cur = queue.back();
        queue.pop_back();
        for (const auto& alpha : rs.positive_roots_fund) {
            Weight next = detail::add_scaled(cur, -1, alpha);
            if (next.is_dominant() && seen.insert(next).second) queue.push_back(next);
        }
    }
    // order by depth below lambda, then by coordinates, so output is stable
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        std::vector<int> da(rs.rank()), db(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) {
            da[i] = lambda[i] - a[i];
            db[i] = lambda[i] - b[i];
        }
        const Rational ha = detail::alpha_height(rs, da), hb = detail::alpha_height(rs, db);
        if (ha != hb) return ha < hb;
        return a.coords < b.coords;
    });
    return out;
}

// multiplicities of all dominant weights of V(lambda), by Freudenthal's
// recursion processed downward from the highest weight
inline std::map<Weight, Integer> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
    const auto doms = dominant_weights_below(rs, lambda);
    std::map<Weight, Integer> mult;
    const Weight rho(std::vector<int>(rs.rank(), 1));
    const Weight lam_rho = detail::add_scaled(lambda, 1, rho);
    const Rational lam_norm = weight_inner(rs, lam_rho, lam_rho);

    auto lookup = [&](const Weight& w) -> Integer {
        const auto [dom, word] = dominant_representative(rs, w);
        auto it = mult.find(dom);
        return it == mult.end() ? Integer(0) : it->second;
    };

    for (const auto& mu : doms) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        Rational numer = 0;
        for (const auto& alpha : rs.positive_roots_fund) {
            for (int k = 1;; ++k) {
                const Weight nu = detail::add_scaled(mu, k, alpha);
                std::vector<int> diff(rs.rank());
                for (int i = 0; i < rs.rank(); ++i) diff[i] = lambda[i] - nu[i];
                if (detail::alpha_height(rs, diff) < 0) break;
                const Integer m = lookup(nu);
                if (m == 0) break;  // weights along a root string are contiguous
                numer += Rational(m) * weight_inner(rs, nu, alpha);
            }
        }
        const Weight mu_rho = detail::add_scaled(mu, 1, rho);
        const Rational denom = lam_norm - weight_inner(rs, mu_rho, mu_rho);
        const Rational m = 2 * numer / denom;
        if (den(m) != 1 || m <= 0)
            throw Error("Freudenthal recursion produced a non-positive or fractional multiplicity at " + mu.str());
        mult[mu] = num(m);
    }
    return mult;
}

inline Integer multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    if (!mu.is_dominant()) throw NotDominant("multiplicity lookup needs a dominant weight, got " + mu.str());
    const auto table = dominant_multiplicities(rs, lambda);
    auto it = table.find(mu);
    if (it == table.end())
        throw NotInWeightSystem(mu.str() + " is not a weight of the module with highest weight " + lambda.str());
    return it->second;
}

// Weyl dimension formula
inline Integer dim(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw NotDominant("dimension formula needs a dominant weight, got " + lambda.str());
    const Weight rho(std::vector<int>(rs.rank(), 1));
    const Weight lr = detail::add_scaled(lambda, 1, rho);
    Rational d = 1;
    for (const auto& alpha : rs.positive_roots_fund)
        d *= weight_inner(rs, lr, alpha) / weight_inner(rs, rho, alpha);
    if (den(d) != 1 || d <= 0) throw Error("Weyl dimension formula returned a non-integer");
    return num(d);
}

struct CharacterByOrbit {
    struct Entry {
        Weight dominant_weight;
        Integer orbit_size;
        Integer multiplicity;
    };
    Weight highest;
    std::vector<Entry> entries;  // ordered by depth below the highest weight
    Integer dimension = 0;
};

inline CharacterByOrbit character_by_orbit(const RootSystem& rs, const Weight& lambda) {
    CharacterByOrbit ch;
    ch.highest = lambda;
    ch.dimension = dim(rs, lambda);
    const auto mults = dominant_multiplicities(rs, lambda);
    Integer total = 0;
    for (const auto& mu : dominant_weights_below(rs, lambda)) {
        const Integer stab = stabilizer_order(rs, mu);
        const Integer size = rs.weyl_order / stab;
        const Integer m = mults.at(mu);
        ch.entries.push_back({mu, size, m});
        total += size * m;
    }
    if (total != ch.dimension)
        throw Error("orbit sizes times multiplicities sum to " + total.str() +
                    " but the Weyl dimension of " + lambda.str() + " is " + ch.dimension.str());
    return ch;
}

} // namespace liechar

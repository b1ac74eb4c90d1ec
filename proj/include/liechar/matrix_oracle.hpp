#pragma once

// Ground-truth checks: evaluate det(z0*I + phi(L)) on explicit matrices and
// compare against the assembled product of orbital factors evaluated at
// generator values read off the defining representation.
//
// Determinants of the z0-pencil use fraction-free Bareiss elimination over
// the univariate polynomial ring Q[z0].  Generator values follow the fixed
// convention det(z0*I - L) = sum_j (-1)^j s_j z0^(N-j) on the defining
// representation; the type-D generator t is a Pfaffian, with its sign
// calibrated on the Cartan element with all theta_i = 1.

#include <random>
#include <sstream>

#include "matrix_rep.hpp"
#include "orbital_factor.hpp"

namespace liechar {

struct PencilElement {
    std::map<std::string, Rational> coefficients;  // basis label -> value
};

namespace detail {

// dense univariate polynomials over Q; coeffs[k] is the z0^k coefficient
using UPoly = std::vector<Rational>;

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    utrim(r);
    return r;
}

inline UPoly usub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

// exact quotient; the Bareiss recurrence guarantees zero remainder
inline UPoly udiv_exact(UPoly num, const UPoly& den) {
    if (den.empty()) throw Error("univariate division by zero");
    if (num.empty()) return {};
    if (num.size() < den.size()) throw NotDivisible("univariate quotient does not exist");
    UPoly q(num.size() - den.size() + 1, Rational(0));
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        const Rational c = num[k + den.size() - 1] / den.back();
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    utrim(num);
    if (!num.empty()) throw NotDivisible("nonzero remainder in exact univariate division");
    utrim(q);
    return q;
}

inline UPoly uderiv(const UPoly& p) {
    UPoly r;
    for (std::size_t k = 1; k < p.size(); ++k) r.push_back(Rational(static_cast<int>(k)) * p[k]);
    utrim(r);
    return r;
}

inline UPoly urem(UPoly a, const UPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        utrim(a);
    }
    return a;
}

inline int ugcd_degree(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return udeg(a);
}

inline UPoly upow(const UPoly& a, int k) {
    UPoly r{Rational(1)};
    for (int i = 0; i < k; ++i) r = umul(r, a);
    return r;
}

// det of a matrix of univariate polynomials, fraction-free
inline UPoly bareiss_det(std::vector<std::vector<UPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return {Rational(1)};
    int sign = 1;
    UPoly prev{Rational(1)};
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].empty()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].empty()) { swap_row = r; break; }
            if (swap_row < 0) return {};  // zero column: singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = udiv_exact(usub(umul(m[k][k], m[i][j]), umul(m[i][k], m[k][j])), prev);
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    UPoly det = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : det) c = -c;
    return det;
}

// det(z0*I + s*L) for the representation matrix of x
inline UPoly pencil_det(const MatrixRep& rep, const PencilElement& x, int s) {
    const int N = rep.dimension;
    QMatrix L(N, N);
    for (const auto& [label, c] : x.coefficients) {
        if (c == 0) continue;
        const QMatrix& b = rep.matrix(label);
        for (std::size_t k = 0; k < L.a.size(); ++k) L.a[k] += c * b.a[k];
    }
    std::vector<std::vector<UPoly>> m(N, std::vector<UPoly>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            UPoly e;
            const Rational v = Rational(s) * L.at(i, j);
            if (v != 0 || i == j) e.push_back(v);
            if (i == j) e.push_back(1);
            m[i][j] = std::move(e);
        }
    return bareiss_det(std::move(m));
}

// Pfaffian of a skew matrix by expansion along the first active row
inline Rational pfaffian(const QMatrix& m) {
    const int n = m.rows;
    if (n % 2 != 0) throw Error("Pfaffian of an odd-dimensional matrix");
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    auto rec = [&](auto&& self, std::vector<int>& idx) -> Rational {
        if (idx.empty()) return 1;
        Rational total = 0;
        const int i0 = idx[0];
        for (std::size_t j = 1; j < idx.size(); ++j) {
            const Rational& v = m.at(i0, idx[j]);
            if (v == 0) continue;
            std::vector<int> rest;
            for (std::size_t k = 1; k < idx.size(); ++k)
                if (k != j) rest.push_back(idx[k]);
            const Rational sub = self(self, rest);
            if (j % 2 == 1) total += v * sub;
            else total -= v * sub;
        }
        return total;
    };
    return rec(rec, active);
}

} // namespace detail

// ---------------------------------------------------------------------------

// det(z0*I + phi(x)) as a polynomial in z0
inline MultiPoly char_poly(const MatrixRep& rep, const PencilElement& x) {
    const auto u = detail::pencil_det(rep, x, +1);
    MultiPoly p;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != 0) p += MultiPoly::variable(z0_var(), static_cast<int>(k)) * u[k];
    return p;
}

// invariant-generator values of x, read from the defining representation
inline std::map<Var, Rational> generator_values(const MatrixRep& defining, const PencilElement& x) {
    const LieType t = defining.lie_type;
    const int n = t.rank;
    const int N = defining.dimension;
    // det(z0*I - L), padded to full length
    auto u = detail::pencil_det(defining, x, -1);
    u.resize(N + 1, Rational(0));
    if (u[N] != 1) throw Error("characteristic polynomial is not monic");

    std::map<Var, Rational> g;
    auto require_zero = [&](int k) {
        if (u[k] != 0) throw Error(t.str() + ": unexpected z0^" + std::to_string(k) + " coefficient");
    };
    switch (t.family) {
        case Family::A:
            require_zero(N - 1);  // traceless
            for (int j = 2; j <= N; ++j)
                g[e_var(j)] = (j % 2 == 0 ? u[N - j] : -u[N - j]);
            break;
        case Family::B:
            for (int k = 0; k <= N; k += 2) require_zero(k);
            for (int j = 1; j <= n; ++j)
                g[sbar_var(j)] = (j % 2 == 0 ? u[N - 2 * j] : -u[N - 2 * j]);
            break;
        case Family::C:
            for (int k = 1; k <= N; k += 2) require_zero(k);
            for (int j = 1; j <= n; ++j)
                g[sbar_var(j)] = (j % 2 == 0 ? u[N - 2 * j] : -u[N - 2 * j]);
            break;
        case Family::D: {
            for (int k = 1; k <= N; k += 2) require_zero(k);
            for (int j = 1; j < n; ++j)
                g[sbar_var(j)] = (j % 2 == 0 ? u[N - 2 * j] : -u[N - 2 * j]);
            // t = Pf(J L) normalized so the Cartan element with all theta = 1 gives 1
            const QMatrix j = detail::form_matrix(t);
            auto pencil_matrix = [&](const PencilElement& p) {
                QMatrix L(N, N);
                for (const auto& [label, c] : p.coefficients) {
                    if (c == 0) continue;
                    const QMatrix& b = defining.matrix(label);
                    for (std::size_t k = 0; k < L.a.size(); ++k) L.a[k] += c * b.a[k];
                }
                return L;
            };
            const auto s = scheme(t);
            std::map<Var, Rational> ones;
            for (int i = 1; i <= n; ++i) ones[theta_var(i)] = 1;
            PencilElement cal;
            for (int i = 1; i <= n; ++i)
                cal.coefficients["h" + std::to_string(i)] = s.cartan_forms[i - 1].eval(ones);
            const Rational pf_cal = detail::pfaffian(j * pencil_matrix(cal));
            if (pf_cal == 0) throw Error("Pfaffian calibration failed");
            const Rational tv = detail::pfaffian(j * pencil_matrix(x)) / pf_cal;
            const Rational sbar_n = (n % 2 == 0 ? u[0] : -u[0]);
            if (tv * tv != sbar_n) throw Error("Pfaffian square does not match the determinant");
            g[t_var()] = tv;
            break;
        }
        case Family::G: {
            for (int k = 0; k <= N; k += 2) require_zero(k);
            const Rational sb1 = -u[5], sb2 = u[3], sb3 = -u[1];
            const Rational g2 = -sb1 / 2;
            if (sb2 != g2 * g2) throw Error("G2 generator relation sbar2 = g2^2 violated");
            g[g_var(2)] = g2;
            g[g_var(6)] = sb3;
            break;
        }
    }
    return g;
}

inline std::map<Var, Rational> generator_values(LieType t, const PencilElement& x) {
    return generator_values(defining_rep(t), x);
}

// ---------------------------------------------------------------------------

struct VerifyReport {
    LieType lie_type;
    bool pass = false;
    std::vector<std::pair<Weight, int>> factor_degrees;  // (mu, z0-degree) in factor order
    std::vector<Integer> multiplicities;
    int first_mismatch_power = -1;
    Rational direct, assembled;  // coefficients at the first mismatching power

    std::string summary() const {
        std::ostringstream os;
        os << lie_type.str() << (pass ? ": pass" : ": MISMATCH");
        os << " [";
        for (std::size_t i = 0; i < factor_degrees.size(); ++i) {
            if (i) os << ", ";
            os << "f" << factor_degrees[i].first.str() << " deg " << factor_degrees[i].second;
            if (multiplicities[i] != 1) os << " ^" << multiplicities[i].str();
        }
        os << "]";
        if (!pass)
            os << " first differing z0^" << first_mismatch_power << ": direct " << direct.str()
               << " vs assembled " << assembled.str();
        return os.str();
    }
};

// exact comparison of det(z0*I + phi(x)) with the assembled factorization
inline VerifyReport verify(const MatrixRep& rep, const std::vector<Weight>& highest,
                           const PencilElement& x) {
    const RootSystem rs = build(rep.lie_type);
    const FactoredCharPoly fac = assemble(rs, highest);
    if (fac.total_degree() != rep.dimension)
        throw Error("module decomposition has dimension " + fac.total_degree().str() +
                    " but the representation is " + std::to_string(rep.dimension) + "-dimensional");

    VerifyReport rep_out;
    rep_out.lie_type = rep.lie_type;
    for (const auto& [f, m] : fac.factors) {
        rep_out.factor_degrees.emplace_back(f.mu, f.degree);
        rep_out.multiplicities.push_back(m);
    }

    const auto gens = generator_values(rep.lie_type, x);
    detail::UPoly assembled{Rational(1)};
    for (const auto& [f, m] : fac.factors) {
        detail::UPoly uf(f.degree + 1, Rational(0));
        for (const auto& [mono, c] : f.poly.terms()) {
            Rational v = c;
            int z0_exp = 0;
            for (const auto& [var, e] : mono.factors) {
                if (var == z0_var()) {
                    z0_exp = e;
                    continue;
                }
                auto it = gens.find(var);
                if (it == gens.end())
                    throw MissingVariable("no generator value for " + VarNames{}.text(var));
                for (int k = 0; k < e; ++k) v *= it->second;
            }
            uf[z0_exp] += v;
        }
        assembled = detail::umul(assembled, detail::upow(uf, static_cast<int>(m)));
    }

    auto direct = detail::pencil_det(rep, x, +1);
    direct.resize(rep.dimension + 1, Rational(0));
    assembled.resize(rep.dimension + 1, Rational(0));
    rep_out.pass = true;
    for (int k = rep.dimension; k >= 0; --k) {
        if (direct[k] == assembled[k]) continue;
        rep_out.pass = false;
        rep_out.first_mismatch_power = k;
        rep_out.direct = direct[k];
        rep_out.assembled = assembled[k];
        break;
    }
    return rep_out;
}

// ---------------------------------------------------------------------------

// small random rational coefficients, rejection-sampled so the defining
// characteristic polynomial is squarefree (distinct eigenvalues)
inline PencilElement random_pencil(const MatrixRep& defining, std::mt19937_64& rng) {
    auto draw = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PencilElement x;
        for (const auto& label : defining.labels)
            x.coefficients[label] = Rational(draw(-7, 7), draw(1, 7));
        auto f = detail::pencil_det(defining, x, -1);
        detail::utrim(f);
        if (f.empty()) continue;
        if (detail::ugcd_degree(f, detail::uderiv(f)) == 0) return x;
    }
    throw Error("could not sample a regular pencil element");
}

} // namespace liechar

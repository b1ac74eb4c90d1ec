#pragma once

// Root-system data for the families A, B, C, D and G2: Cartan matrix,
// Weyl-group order, positive roots, and the change of basis between
// fundamental weights and simple roots.
//
// Conventions.  The Cartan matrix stores a_ij = <alpha_i, alpha_j^vee>, and
// the simple reflection acts on fundamental-weight coordinates by
// gamma_i(w) = w - w_i * (row i).  The B_n orientation (a_{n-1,n} = -2,
// a_{n,n-1} = -1, i.e. the last simple root short) and the C_n transpose of
// it are fixed by matching the reflection gamma_1(l1, 0) = (-l1, 2*l1) in
// rank 2.  For G2, a_12 = -1 and a_21 = -3 (second simple root long).

#include <array>
#include <cctype>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace liechar {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

struct LieType {
    Family family;
    int rank;

    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
    bool operator==(const LieType& o) const = default;
};

// "A2", "B3", "G2", ... -> LieType; rank limits checked in build()
inline LieType parse_lie_type(const std::string& s) {
    if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
        throw InvalidType("cannot parse type string '" + s + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f != 'A' && f != 'B' && f != 'C' && f != 'D' && f != 'G')
        throw InvalidType("unsupported family '" + std::string(1, f) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InvalidType("cannot parse rank in '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
    }
    return {static_cast<Family>(f), rank};
}

struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[i]; }
    int& operator[](int i) { return coords[i]; }

    bool is_dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const Weight& o) const = default;
    bool operator<(const Weight& o) const { return coords < o.coords; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

struct RootSystem {
    LieType lie_type;
    std::vector<std::vector<int>> cartan;              // a_ij = <alpha_i, alpha_j^vee>
    Integer weyl_order;
    std::vector<std::vector<int>> positive_roots;      // simple-root coordinates
    std::vector<std::vector<Rational>> fund_in_simple; // row i: beta_i in the alpha basis

    int rank() const { return lie_type.rank; }

    // squared-length parameters d_i = (alpha_i, alpha_i)/2, long roots at 1;
    // used by the Freudenthal recursion and the Weyl dimension formula
    std::vector<Rational> root_half_lengths;

    // positive roots converted to fundamental-weight coordinates
    std::vector<Weight> positive_roots_fund;
};

namespace detail {

inline Integer factorial(int n) {
    Integer r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw Error("singular matrix in basis conversion");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = m[col][col];
        for (int j = 0; j < n; ++j) { m[col][j] /= d; inv[col][j] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int j = 0; j < n; ++j) { m[r][j] -= f * m[col][j]; inv[r][j] -= f * inv[col][j]; }
        }
    }
    return inv;
}

} // namespace detail

inline RootSystem build(LieType t) {
    const int n = t.rank;
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw InvalidRank(t.str() + ": " + what);
    };
    RootSystem rs;
    rs.lie_type = t;
    rs.cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) rs.cartan[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) rs.cartan[i][i + 1] = rs.cartan[i + 1][i] = -1;
    };
    switch (t.family) {
        case Family::A:
            need(n >= 1, "type A needs rank >= 1");
            chain(n);
            rs.weyl_order = detail::factorial(n + 1);
            break;
        case Family::B:
            need(n >= 2, "type B needs rank >= 2");
            chain(n);
            rs.cartan[n - 2][n - 1] = -2;  // last simple root short
            rs.cartan[n - 1][n - 2] = -1;
            rs.weyl_order = detail::factorial(n) << n;
            break;
        case Family::C:
            need(n >= 2, "type C needs rank >= 2");
            chain(n);
            rs.cartan[n - 2][n - 1] = -1;  // last simple root long
            rs.cartan[n - 1][n - 2] = -2;
            rs.weyl_order = detail::factorial(n) << n;
            break;
        case Family::D:
            need(n >= 2, "type D needs rank >= 2");
            chain(n - 1);  // nodes 1..n-1 form a chain; node n attaches to n-2
            if (n >= 3) rs.cartan[n - 3][n - 1] = rs.cartan[n - 1][n - 3] = -1;
            rs.weyl_order = detail::factorial(n) << (n - 1);
            break;
        case Family::G:
            need(n == 2, "type G is rank 2 only");
            rs.cartan[0][1] = -1;
            rs.cartan[1][0] = -3;
            rs.weyl_order = 12;
            break;
    }

    // fundamental weights in the alpha basis: the matrix F with F * cartan = I
    {
        std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i][j] = rs.cartan[i][j];
        rs.fund_in_simple = detail::invert(std::move(c));
    }

    // positive roots: reflection closure of the simple roots in alpha coords
    {
        std::set<std::vector<int>> all;
        std::vector<std::vector<int>> queue;
        for (int i = 0; i < n; ++i) {
            std::vector<int> a(n, 0);
            a[i] = 1;
            all.insert(a);
            queue.push_back(a);
        }
        while (!queue.empty()) {
            auto v = queue.back();
            queue.pop_back();
            for (int i = 0; i < n; ++i) {
                int pairing = 0;  // <v, alpha_i^vee> = sum_j v_j a_ji
                for (int j = 0; j < n; ++j) pairing += v[j] * rs.cartan[j][i];
                auto w = v;
                w[i] -= pairing;
                if (all.insert(w).second) queue.push_back(w);
            }
        }
        for (const auto& v : all) {
            bool pos = true;
            for (int c : v) pos = pos && c >= 0;
            if (pos) rs.positive_roots.push_back(v);
        }
        const std::size_t expected = [&]() -> std::size_t {
            switch (t.family) {
                case Family::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
                case Family::B:
                case Family::C: return static_cast<std::size_t>(n) * n;
                case Family::D: return static_cast<std::size_t>(n) * (n - 1);
                case Family::G: return 6;
            }
            return 0;
        }();
        if (rs.positive_roots.size() != expected)
            throw Error(t.str() + ": positive-root closure produced " +
                        std::to_string(rs.positive_roots.size()) + " roots, expected " +
                        std::to_string(expected));
    }

    // d_i from the symmetrization d_j * a_ij = d_i * a_ji, long roots at 1
    {
        std::vector<Rational> d(n, 0);
        d[0] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j || rs.cartan[i][j] == 0) continue;
                    if (d[i] != 0 && d[j] == 0) {
                        d[j] = d[i] * rs.cartan[j][i] / rs.cartan[i][j];
                        changed = true;
                    }
                }
        }
        Rational dmax = 0;
        for (const auto& x : d) dmax = std::max(dmax, x);
        for (auto& x : d) x /= dmax;
        rs.root_half_lengths = std::move(d);
    }

    // positive roots in fundamental coordinates: coords_k = sum_j c_j a_jk
    for (const auto& v : rs.positive_roots) {
        Weight w(std::vector<int>(n, 0));
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) w[k] += v[j] * rs.cartan[j][k];
        rs.positive_roots_fund.push_back(std::move(w));
    }

    return rs;
}

// gamma_i(w) = w - w_i * (row i of the Cartan matrix); i is 1-based
inline Weight simple_reflection(const RootSystem& rs, int i, const Weight& w) {
    if (i < 1 || i > rs.rank()) throw IndexOutOfRange("reflection index " + std::to_string(i));
    Weight r = w;
    const int li = w[i - 1];
    if (li != 0)
        for (int j = 0; j < rs.rank(); ++j) r[j] -= li * rs.cartan[i - 1][j];
    return r;
}

// Coxeter exponent m_ij: the order of gamma_i gamma_j
inline int coxeter_m(const RootSystem& rs, int i, int j) {
    const int prod = rs.cartan[i - 1][j - 1] * rs.cartan[j - 1][i - 1];
    switch (prod) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
    }
    throw Error("unexpected Cartan product");
}

// inner product of weights in fundamental coordinates:
// (beta_i, beta_j) = d_i * F_ji  with F = fund_in_simple
inline Rational weight_inner(const RootSystem& rs, const Weight& a, const Weight& b) {
    Rational total = 0;
    const int n = rs.rank();
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            total += Rational(a[i]) * b[j] * rs.root_half_lengths[i] * rs.fund_in_simple[j][i];
        }
    }
    return total;
}

} // namespace liechar

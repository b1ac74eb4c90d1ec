#pragma once

// Explicit matrix realizations used as ground truth: the defining
// representations of sl(n+1), o(2n+1), sp(2n), o(2n) and the 7-dimensional
// G2 representation, plus adjoint and sym^k/ext^k representations built from
// them.  Everything is exact-rational.
//
// Layout conventions.  For o(2n+1) the invariant form is J = 1 (+) [[0,I],[I,0]]
// with the one-dimensional block first; for sp(2n), J = [[0,I],[-I,0]]; for
// o(2n), J = [[0,I],[I,0]].  These make the listed Cartan elements diagonal
// and J*L skew for type D, which is what the Pfaffian route needs.  Basis
// matrices other than the h_i are simultaneous ad-eigenvectors; each is
// labelled by its root in fundamental coordinates, e.g. "e(1,-1,0)".

#include <map>
#include <string>
#include <vector>

#include "root_system.hpp"

namespace liechar {

struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a;  // row-major

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    QMatrix& operator+=(const QMatrix& o) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
        return *this;
    }
    QMatrix& operator-=(const QMatrix& o) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
        return *this;
    }
    friend QMatrix operator+(QMatrix x, const QMatrix& y) { return x += y; }
    friend QMatrix operator-(QMatrix x, const QMatrix& y) { return x -= y; }

    QMatrix& scale(const Rational& c) {
        for (auto& x : a) x *= c;
        return *this;
    }
    friend QMatrix operator*(const Rational& c, QMatrix m) { return m.scale(c); }

    friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
        QMatrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (x.at(i, k) == 0) continue;
                for (int j = 0; j < y.cols; ++j) {
                    if (y.at(k, j) == 0) continue;
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
                }
            }
        return r;
    }

    QMatrix transpose() const {
        QMatrix r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }
};

struct MatrixRep {
    LieType lie_type;
    int dimension = 0;                             // size of the matrices
    std::vector<std::string> labels;               // h1..hn first, then root vectors
    std::map<std::string, QMatrix> basis_matrices;

    const QMatrix& matrix(const std::string& label) const {
        auto it = basis_matrices.find(label);
        if (it == basis_matrices.end()) throw Error("no basis element labelled '" + label + "'");
        return it->second;
    }
    int algebra_dim() const { return static_cast<int>(labels.size()); }
};

namespace detail {

inline QMatrix unit_matrix(int n, int i, int j, const Rational& c) {
    QMatrix m(n, n);
    m.at(i, j) = c;
    return m;
}

// label a non-Cartan basis element by its simultaneous ad-eigenvalues under
// the h_i; throws if the element is not an eigenvector or the root is not
// integral
inline std::string root_label(const std::vector<QMatrix>& cartan, const QMatrix& x) {
    std::size_t lead = 0;
    while (lead < x.a.size() && x.a[lead] == 0) ++lead;
    if (lead == x.a.size()) throw Error("zero basis matrix");
    std::string s = "e(";
    for (std::size_t i = 0; i < cartan.size(); ++i) {
        const QMatrix c = commutator(cartan[i], x);
        const Rational ev = c.a[lead] / x.a[lead];
        QMatrix check = x;
        check.scale(ev);
        if (!(commutator(cartan[i], x) == check)) throw Error("basis matrix is not an ad-eigenvector");
        if (den(ev) != 1) throw Error("non-integral root coordinate");
        if (i) s += ",";
        s += num(ev).str();
    }
    return s + ")";
}

inline void push_basis(MatrixRep& rep, const std::string& label, QMatrix m) {
    rep.labels.push_back(label);
    rep.basis_matrices.emplace(label, std::move(m));
}

// invariant bilinear form of the B/C/D realizations
inline QMatrix form_matrix(LieType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::B: {
            QMatrix j(2 * n + 1, 2 * n + 1);
            j.at(0, 0) = 1;
            for (int i = 1; i <= n; ++i) j.at(i, n + i) = j.at(n + i, i) = 1;
            return j;
        }
        case Family::C: {
            QMatrix j(2 * n, 2 * n);
            for (int i = 0; i < n; ++i) {
                j.at(i, n + i) = 1;
                j.at(n + i, i) = -1;
            }
            return j;
        }
        case Family::D: {
            QMatrix j(2 * n, 2 * n);
            for (int i = 0; i < n; ++i) j.at(i, n + i) = j.at(n + i, i) = 1;
            return j;
        }
        default: throw InvalidType("no bilinear form for type " + t.str());
    }
}

// the parametrized 7x7 matrix for G2: entry list (row, col, parameter, coeff);
// parameters z11, z22 span the Cartan, the other twelve are root vectors
struct G2Entry { int r, c, p; int coeff; };
inline const std::vector<std::string>& g2_params() {
    static const std::vector<std::string> names = {
        "z11", "z22", "z12", "z13", "z14", "z15", "z16", "z17",
        "z25", "z27", "z34", "z43", "z52", "z64"};
    return names;
}
inline const std::vector<G2Entry>& g2_entries() {
    // indices into g2_params(); transcribed row by row
    static const std::vector<G2Entry> e = {
        {0, 1, 2, -2}, {0, 2, 3, 2},  {0, 3, 4, 2},  {0, 4, 5, 2},  {0, 5, 6, -2}, {0, 6, 7, 2},
        {1, 0, 6, 1},  {1, 1, 0, 1},  {1, 1, 1, -1}, {1, 2, 7, 1},  {1, 3, 5, -1}, {1, 4, 8, 1},  {1, 6, 9, 1},
        {2, 0, 5, 1},  {2, 1, 4, 1},  {2, 2, 0, -1}, {2, 3, 10, -1}, {2, 5, 8, 1}, {2, 6, 6, -1},
        {3, 0, 7, 1},  {3, 1, 3, -1}, {3, 2, 11, 1}, {3, 3, 0, 2},  {3, 3, 1, -1}, {3, 4, 6, 1},  {3, 5, 9, 1},
        {4, 0, 3, 1},  {4, 1, 12, 1}, {4, 3, 2, -1}, {4, 4, 0, 1},  {4, 5, 7, 1},  {4, 6, 11, -1},
        {5, 0, 2, 1},  {5, 2, 12, 1}, {5, 3, 13, 1}, {5, 4, 4, 1},  {5, 5, 0, -1}, {5, 5, 1, 1},  {5, 6, 3, -1},
        {6, 0, 4, 1},  {6, 1, 13, 1}, {6, 2, 2, 1},  {6, 4, 10, 1}, {6, 5, 5, -1}, {6, 6, 0, -2}, {6, 6, 1, 1}};
    return e;
}

} // namespace detail

// ---------------------------------------------------------------------------

inline MatrixRep defining_rep(LieType t) {
    build(t);  // validates family/rank
    const int n = t.rank;
    MatrixRep rep;
    rep.lie_type = t;

    std::vector<QMatrix> cartan;
    std::vector<QMatrix> others;

    switch (t.family) {
        case Family::A: {
            const int N = n + 1;
            rep.dimension = N;
            for (int i = 1; i <= n; ++i) {
                QMatrix h(N, N);
                h.at(i - 1, i - 1) = 1;
                h.at(i, i) = -1;
                cartan.push_back(std::move(h));
            }
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    if (i != j) others.push_back(detail::unit_matrix(N, i, j, 1));
            break;
        }
        case Family::B: {
            const int N = 2 * n + 1;
            rep.dimension = N;
            for (int i = 1; i < n; ++i) {
                QMatrix h(N, N);
                h.at(i, i) = 1;
                h.at(i + 1, i + 1) = -1;
                h.at(n + i, n + i) = -1;
                h.at(n + i + 1, n + i + 1) = 1;
                cartan.push_back(std::move(h));
            }
            {
                QMatrix h(N, N);
                h.at(n, n) = 2;
                h.at(2 * n, 2 * n) = -2;
                cartan.push_back(std::move(h));
            }
            // skew S -> S*J with sigma(0)=0, sigma(i)=n+i
            auto sigma = [&](int k) { return k == 0 ? 0 : (k <= n ? n + k : k - n); };
            for (int a = 0; a < N; ++a)
                for (int b = a + 1; b < N; ++b) {
                    if (b == sigma(a)) continue;  // diagonal: Cartan span
                    QMatrix x(N, N);
                    x.at(a, sigma(b)) += 1;
                    x.at(b, sigma(a)) -= 1;
                    others.push_back(std::move(x));
                }
            break;
        }
        case Family::C: {
            const int N = 2 * n;
            rep.dimension = N;
            for (int i = 1; i < n; ++i) {
                QMatrix h(N, N);
                h.at(i - 1, i - 1) = 1;
                h.at(i, i) = -1;
                h.at(n + i - 1, n + i - 1) = -1;
                h.at(n + i, n + i) = 1;
                cartan.push_back(std::move(h));
            }
            {
                QMatrix h(N, N);
                h.at(n - 1, n - 1) = 1;
                h.at(2 * n - 1, 2 * n - 1) = -1;
                cartan.push_back(std::move(h));
            }
            // symmetric S -> S*J; sign of J entry in row k
            auto sigma = [&](int k) { return k < n ? n + k : k - n; };
            auto sgn = [&](int k) { return k < n ? 1 : -1; };
            for (int a = 0; a < N; ++a) {
                QMatrix x(N, N);
                x.at(a, sigma(a)) = sgn(a);
                others.push_back(std::move(x));
            }
            for (int a = 0; a < N; ++a)
                for (int b = a + 1; b < N; ++b) {
                    if (b == sigma(a)) continue;
                    QMatrix x(N, N);
                    x.at(a, sigma(b)) += sgn(b);
                    x.at(b, sigma(a)) += sgn(a);
                    others.push_back(std::move(x));
                }
            break;
        }
        case Family::D: {
            const int N = 2 * n;
            rep.dimension = N;
            for (int i = 1; i < n; ++i) {
                QMatrix h(N, N);
                h.at(i - 1, i - 1) = 1;
                h.at(i, i) = -1;
                h.at(n + i - 1, n + i - 1) = -1;
                h.at(n + i, n + i) = 1;
                cartan.push_back(std::move(h));
            }
            {
                QMatrix h(N, N);
                h.at(n - 2, n - 2) = 1;
                h.at(n - 1, n - 1) = 1;
                h.at(2 * n - 2, 2 * n - 2) = -1;
                h.at(2 * n - 1, 2 * n - 1) = -1;
                cartan.push_back(std::move(h));
            }
            auto sigma = [&](int k) { return k < n ? n + k : k - n; };
            for (int a = 0; a < N; ++a)
                for (int b = a + 1; b < N; ++b) {
                    if (b == sigma(a)) continue;
                    QMatrix x(N, N);
                    x.at(a, sigma(b)) += 1;
                    x.at(b, sigma(a)) -= 1;
                    others.push_back(std::move(x));
                }
            break;
        }
        case Family::G: {
            rep.dimension = 7;
            std::vector<QMatrix> by_param(14, QMatrix(7, 7));
            for (const auto& e : detail::g2_entries()) by_param[e.p].at(e.r, e.c) = e.coeff;
            cartan.push_back(by_param[0]);
            cartan.push_back(by_param[1]);
            for (int p = 2; p < 14; ++p) others.push_back(by_param[p]);
            break;
        }
    }

    // bilinear-form condition L*J + J*L^T = 0 for the orthogonal/symplectic types
    if (t.family == Family::B || t.family == Family::C || t.family == Family::D) {
        const QMatrix j = detail::form_matrix(t);
        auto check = [&](const QMatrix& m) {
            if (!(m * j + j * m.transpose()).is_zero())
                throw Error(t.str() + ": basis matrix violates the bilinear-form condition");
        };
        for (const auto& h : cartan) check(h);
        for (const auto& x : others) check(x);
    }

    for (int i = 0; i < n; ++i) detail::push_basis(rep, "h" + std::to_string(i + 1), cartan[i]);
    for (auto& x : others) {
        std::string label = detail::root_label(cartan, x);
        detail::push_basis(rep, label, std::move(x));
    }
    if (rep.basis_matrices.size() != rep.labels.size())
        throw Error(t.str() + ": duplicate root label in basis construction");
    return rep;
}

// ---------------------------------------------------------------------------

namespace detail {

// expand matrices in a fixed basis: pick pivot rows once, invert the square
// subsystem, then solve + verify each right-hand side
class BasisSolver {
public:
    explicit BasisSolver(const std::vector<const QMatrix*>& basis) : basis_(basis) {
        const int m = static_cast<int>(basis.size());
        const std::size_t ncells = basis[0]->a.size();
        // Gaussian elimination on the (ncells x m) column matrix to find pivot rows
        std::vector<std::vector<Rational>> work(ncells, std::vector<Rational>(m));
        for (int j = 0; j < m; ++j)
            for (std::size_t r = 0; r < ncells; ++r) work[r][j] = basis[j]->a[r];
        std::vector<std::size_t> pivots;
        for (int col = 0; col < m; ++col) {
            std::size_t pr = ncells;
            for (std::size_t r = 0; r < ncells; ++r) {
                bool used = false;
                for (std::size_t p : pivots) used = used || p == r;
                if (!used && work[r][col] != 0) { pr = r; break; }
            }
            if (pr == ncells) throw Error("basis matrices are linearly dependent");
            pivots.push_back(pr);
            const Rational d = work[pr][col];
            for (std::size_t r = 0; r < ncells; ++r) {
                if (r == pr || work[r][col] == 0) continue;
                const Rational f = work[r][col] / d;
                for (int j = col; j < m; ++j) work[r][j] -= f * work[pr][j];
            }
        }
        pivot_rows_ = pivots;
        // invert the m x m pivot submatrix of the original columns
        std::vector<std::vector<Rational>> sq(m, std::vector<Rational>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sq[i][j] = basis[j]->a[pivot_rows_[i]];
        inv_ = invert(std::move(sq));
    }

    // coefficients of x in the basis; throws if x is outside the span
    std::vector<Rational> solve(const QMatrix& x) const {
        const int m = static_cast<int>(basis_.size());
        std::vector<Rational> c(m, 0);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (inv_[i][j] == 0) continue;
                c[i] += inv_[i][j] * x.a[pivot_rows_[j]];
            }
        }
        // verify on every cell, not just the pivots
        std::vector<Rational> recon(x.a.size(), 0);
        for (int j = 0; j < m; ++j) {
            if (c[j] == 0) continue;
            for (std::size_t r = 0; r < recon.size(); ++r) recon[r] += c[j] * basis_[j]->a[r];
        }
        for (std::size_t r = 0; r < recon.size(); ++r)
            if (recon[r] != x.a[r]) throw Error("matrix lies outside the basis span");
        return c;
    }

private:
    std::vector<const QMatrix*> basis_;
    std::vector<std::size_t> pivot_rows_;
    std::vector<std::vector<Rational>> inv_;
};

} // namespace detail

// expand an algebra element in a representation's basis (bracket-closure checks)
inline std::vector<Rational> expand_in_basis(const MatrixRep& rep, const QMatrix& x) {
    std::vector<const QMatrix*> ptrs;
    for (const auto& l : rep.labels) ptrs.push_back(&rep.matrix(l));
    return detail::BasisSolver(ptrs).solve(x);
}

// adjoint representation: ad-matrices of the defining basis on itself
inline MatrixRep adjoint_rep(LieType t) {
    const MatrixRep def = defining_rep(t);
    const int m = def.algebra_dim();
    std::vector<const QMatrix*> ptrs;
    for (const auto& l : def.labels) ptrs.push_back(&def.matrix(l));
    const detail::BasisSolver solver(ptrs);

    MatrixRep rep;
    rep.lie_type = t;
    rep.dimension = m;
    for (int i = 0; i < m; ++i) {
        QMatrix ad(m, m);
        for (int j = 0; j < m; ++j) {
            const auto c = solver.solve(commutator(*ptrs[i], *ptrs[j]));
            for (int k = 0; k < m; ++k) ad.at(k, j) = c[k];
        }
        detail::push_basis(rep, def.labels[i], std::move(ad));
    }
    return rep;
}

// ---------------------------------------------------------------------------

enum class Induced { Sym, Ext };

// derivation action on Sym^k / Ext^k of a representation
inline MatrixRep induced_rep(const MatrixRep& base, Induced kind, int k) {
    if (k < 1) throw InvalidPower("induced power must be >= 1");
    if (kind == Induced::Ext && k > base.dimension)
        throw InvalidPower("exterior power exceeds the dimension");
    const int d = base.dimension;

    // index tuples: weakly increasing for Sym, strictly increasing for Ext
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            tuples.push_back(cur);
            return;
        }
        for (int i = start; i < d; ++i) {
            cur.push_back(i);
            self(self, kind == Induced::Sym ? i : i + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);

    MatrixRep rep;
    rep.lie_type = base.lie_type;
    rep.dimension = static_cast<int>(tuples.size());
    for (const auto& label : base.labels) {
        const QMatrix& x = base.matrix(label);
        QMatrix m(rep.dimension, rep.dimension);
        for (std::size_t col = 0; col < tuples.size(); ++col) {
            const auto& tup = tuples[col];
            for (int slot = 0; slot < k; ++slot) {
                for (int a = 0; a < d; ++a) {
                    const Rational& c = x.at(a, tup[slot]);
                    if (c == 0) continue;
                    if (kind == Induced::Sym) {
                        auto target = tup;
                        target[slot] = a;
                        std::sort(target.begin(), target.end());
                        m.at(index.at(target), static_cast<int>(col)) += c;
                    } else {
                        std::vector<int> rest;
                        for (int s = 0; s < k; ++s)
                            if (s != slot) rest.push_back(tup[s]);
                        bool clash = false;
                        for (int r : rest) clash = clash || r == a;
                        if (clash) continue;
                        int pos = 0;
                        while (pos < static_cast<int>(rest.size()) && rest[pos] < a) ++pos;
                        const int sign = (slot - pos) % 2 == 0 ? 1 : -1;
                        rest.insert(rest.begin() + pos, a);
                        m.at(index.at(rest), static_cast<int>(col)) += Rational(sign) * c;
                    }
                }
            }
        }
        detail::push_basis(rep, label, std::move(m));
    }
    return rep;
}

// ---------------------------------------------------------------------------

// highest root in fundamental coordinates (= adjoint highest weight)
inline Weight highest_root(const RootSystem& rs) {
    std::size_t best = 0;
    int best_h = -1;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        int h = 0;
        for (int c : rs.positive_roots[i]) h += c;
        if (h > best_h) { best_h = h; best = i; }
    }
    return rs.positive_roots_fund[best];
}

// known module decompositions of the oracle representations
inline std::vector<Weight> module_weights_for(const RootSystem& rs, const std::string& rep_name) {
    const int n = rs.rank();
    auto fundamental = [&](int i) {  // 1-based
        Weight w(std::vector<int>(n, 0));
        w[i - 1] = 1;
        return w;
    };
    if (rep_name == "defining") return {fundamental(1)};
    if (rep_name == "adjoint") return {highest_root(rs)};
    if (rep_name == "sym2") {
        if (rs.lie_type.family != Family::A)
            throw InvalidType("sym2 decomposition is only wired for type A");
        Weight w(std::vector<int>(n, 0));
        w[0] = 2;
        return {w};
    }
    if (rep_name == "ext2") {
        if (rs.lie_type.family != Family::A)
            throw InvalidType("ext2 decomposition is only wired for type A");
        if (n == 1) return {Weight(std::vector<int>{0})};  // ext^2 of sl(2) defining is trivial
        return {fundamental(2)};
    }
    throw InvalidType("unknown representation '" + rep_name + "'");
}

inline MatrixRep representation_by_name(LieType t, const std::string& rep_name) {
    if (rep_name == "defining") return defining_rep(t);
    if (rep_name == "adjoint") return adjoint_rep(t);
    if (rep_name == "sym2") return induced_rep(defining_rep(t), Induced::Sym, 2);
    if (rep_name == "ext2") return induced_rep(defining_rep(t), Induced::Ext, 2);
    throw InvalidType("unknown representation '" + rep_name + "'");
}

} // namespace liechar

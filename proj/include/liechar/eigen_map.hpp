#pragma once

// Eigenvalue coordinates.  A diagonalizable element of the algebra is
// conjugate to sum_i c_i(theta) H_i for type-specific linear forms c_i; a
// weight w then contributes the eigenvalue v(w, theta) = sum_i c_i(theta) w_i.
//
// The forms, with theta gathered as partial sums:
//   A_{n-1}: c_i = th1+...+thi                          (n thetas, sum = 0)
//   B_n:     c_i = th1+...+thi (i<n), c_n = (sum th)/2
//   C_n:     c_i = th1+...+thi
//   D_n:     c_i (i<=n-2) as in B, c_{n-1} = (th1+...+th_{n-1}-thn)/2,
//            c_n = (sum th)/2
//   G2:      c_1 = -th2-th3, c_2 = th1-th3               (3 thetas, sum = 0)

#include <map>
#include <optional>
#include <vector>

#include "root_system.hpp"

namespace liechar {

struct EigenCoordinateScheme {
    LieType lie_type;
    int num_thetas;
    std::vector<MultiPoly> cartan_forms;    // c_1..c_rank, linear in theta
    std::optional<MultiPoly> constraint;    // th1+...+thn when the sum is constrained to 0
};

inline EigenCoordinateScheme scheme(LieType t) {
    const int n = t.rank;
    EigenCoordinateScheme s;
    s.lie_type = t;
    auto partial = [](int upto) {
        MultiPoly p;
        for (int j = 1; j <= upto; ++j) p += MultiPoly::variable(theta_var(j));
        return p;
    };
    switch (t.family) {
        case Family::A:
            s.num_thetas = n + 1;
            for (int i = 1; i <= n; ++i) s.cartan_forms.push_back(partial(i));
            s.constraint = partial(n + 1);
            break;
        case Family::B:
            s.num_thetas = n;
            for (int i = 1; i < n; ++i) s.cartan_forms.push_back(partial(i));
            s.cartan_forms.push_back(partial(n) * Rational(1, 2));
            break;
        case Family::C:
            s.num_thetas = n;
            for (int i = 1; i <= n; ++i) s.cartan_forms.push_back(partial(i));
            break;
        case Family::D:
            s.num_thetas = n;
            for (int i = 1; i <= n - 2; ++i) s.cartan_forms.push_back(partial(i));
            s.cartan_forms.push_back((partial(n - 1) - MultiPoly::variable(theta_var(n))) * Rational(1, 2));
            s.cartan_forms.push_back(partial(n) * Rational(1, 2));
            break;
        case Family::G:
            s.num_thetas = 3;
            s.cartan_forms.push_back(-MultiPoly::variable(theta_var(2)) - MultiPoly::variable(theta_var(3)));
            s.cartan_forms.push_back(MultiPoly::variable(theta_var(1)) - MultiPoly::variable(theta_var(3)));
            s.constraint = partial(3);
            break;
        default:
            throw InvalidType("no eigenvalue scheme for this type");
    }
    return s;
}

inline MultiPoly eigen_form(const EigenCoordinateScheme& s, const Weight& w) {
    if (w.rank() != static_cast<int>(s.cartan_forms.size()))
        throw Error("weight rank does not match the scheme");
    MultiPoly v;
    for (int i = 0; i < w.rank(); ++i)
        if (w[i] != 0) v += s.cartan_forms[i] * Rational(w[i]);
    return v;
}

// The theta-side action matching the simple reflection gamma_i: a signed
// permutation sigma with v(gamma_i(w), theta) = v(w, sigma(theta)), exactly
// for B/C/D, and modulo the constraint sum(theta) = 0 for the last type-A
// generator and the second G2 generator.
struct ThetaAction {
    std::map<Var, MultiPoly> substitution;
    bool exact;  // false: equality only after imposing the constraint
};

inline ThetaAction theta_action(const EigenCoordinateScheme& s, int i) {
    const int rank = static_cast<int>(s.cartan_forms.size());
    if (i < 1 || i > rank) throw IndexOutOfRange("generator index " + std::to_string(i));
    const int n = s.num_thetas;
    auto th = [](int k) { return MultiPoly::variable(theta_var(k)); };
    ThetaAction act;
    act.exact = true;
    auto swap_thetas = [&](int a, int b) {
        act.substitution[theta_var(a)] = th(b);
        act.substitution[theta_var(b)] = th(a);
    };
    switch (s.lie_type.family) {
        case Family::A:
            swap_thetas(i, i + 1);
            act.exact = i < rank;  // the last swap moves theta_n, seen only through the constraint
            break;
        case Family::B:
        case Family::C:
            if (i < rank) swap_thetas(i, i + 1);
            else act.substitution[theta_var(n)] = -th(n);
            break;
        case Family::D:
            if (i < rank - 1) {
                swap_thetas(i, i + 1);
            } else if (i == rank - 1) {
                swap_thetas(n - 1, n);
            } else {
                act.substitution[theta_var(n - 1)] = -th(n);
                act.substitution[theta_var(n)] = -th(n - 1);
            }
            break;
        case Family::G:
            if (i == 1) {
                act.substitution[theta_var(1)] = -th(3);
                act.substitution[theta_var(2)] = -th(2);
                act.substitution[theta_var(3)] = -th(1);
            } else {
                swap_thetas(2, 3);
                act.exact = false;
            }
            break;
    }
    return act;
}

// substitute theta_n = -(th1+...+th_{n-1}) where the scheme carries the
// trace constraint; identity for B/C/D
inline MultiPoly impose_constraint(const EigenCoordinateScheme& s, const MultiPoly& p) {
    if (!s.constraint) return p;
    MultiPoly rest;
    for (int j = 1; j < s.num_thetas; ++j) rest -= MultiPoly::variable(theta_var(j));
    return p.substitute({{theta_var(s.num_thetas), rest}});
}

} // namespace liechar

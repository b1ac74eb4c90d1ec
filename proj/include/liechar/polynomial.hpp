#pragma once

// Sparse multivariate polynomials over exact rationals.
//
// Variables live in a single global namespace with a fixed precedence order
//   z0 < theta_i < e_i < sbar_i < t < g_i < l_i < matrix entries z_{i,j}
// (z0 is the most significant variable).  Terms are kept in canonical form:
// no zero coefficients, no zero exponents, and a graded-lexicographic term
// order, so equality is structural.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include "errors.hpp"

namespace liechar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

// ---------------------------------------------------------------------------
// Variables

enum class VarKind : std::uint8_t {
    Z0 = 0,      // the pencil variable
    Theta = 1,   // eigenvalue parameters theta_1..theta_n
    E = 2,       // elementary symmetric generators e_1..e_n
    SBar = 3,    // even-power generators sbar_1..sbar_n
    T = 4,       // type-D product generator, t^2 = sbar_n
    G = 5,       // G2 generators g2, g6 (index = weighted degree)
    L = 6,       // symbolic weight coordinates l_1..l_n
    Entry = 7,   // matrix-entry symbols z_{i,j}, index = (i<<8)|j
};

using Var = std::uint32_t;

constexpr Var make_var(VarKind k, std::uint32_t index) {
    return (static_cast<std::uint32_t>(k) << 24) | index;
}
constexpr VarKind var_kind(Var v) { return static_cast<VarKind>(v >> 24); }
constexpr std::uint32_t var_index(Var v) { return v & 0xffffffu; }

constexpr Var z0_var() { return make_var(VarKind::Z0, 0); }
constexpr Var theta_var(int i) { return make_var(VarKind::Theta, i); }  // 1-based
constexpr Var e_var(int i) { return make_var(VarKind::E, i); }
constexpr Var sbar_var(int i) { return make_var(VarKind::SBar, i); }
constexpr Var t_var() { return make_var(VarKind::T, 0); }
constexpr Var g_var(int i) { return make_var(VarKind::G, i); }          // i in {2, 6}
constexpr Var l_var(int i) { return make_var(VarKind::L, i); }
constexpr Var entry_var(int i, int j) { return make_var(VarKind::Entry, (static_cast<std::uint32_t>(i) << 8) | j); }

// Plain-text / LaTeX names.  The `paper_a2` style prints e2, e3 as p, q, the
// convention used throughout for rank-2 type A output.
struct VarNames {
    bool paper_a2 = false;

    std::string text(Var v) const {
        const auto i = var_index(v);
        switch (var_kind(v)) {
            case VarKind::Z0: return "z0";
            case VarKind::Theta: return "th" + std::to_string(i);
            case VarKind::E:
                if (paper_a2 && i == 2) return "p";
                if (paper_a2 && i == 3) return "q";
                return "e" + std::to_string(i);
            case VarKind::SBar: return "sb" + std::to_string(i);
            case VarKind::T: return "t";
            case VarKind::G: return "g" + std::to_string(i);
            case VarKind::L: return "l" + std::to_string(i);
            case VarKind::Entry:
                return "z_" + std::to_string(i >> 8) + "_" + std::to_string(i & 0xff);
        }
        return "?";
    }

    std::string latex(Var v) const {
        const auto i = var_index(v);
        switch (var_kind(v)) {
            case VarKind::Z0: return "z_0";
            case VarKind::Theta: return "\\theta_{" + std::to_string(i) + "}";
            case VarKind::E:
                if (paper_a2 && i == 2) return "p";
                if (paper_a2 && i == 3) return "q";
                return "e_{" + std::to_string(i) + "}";
            case VarKind::SBar: return "\\bar{s}_{" + std::to_string(i) + "}";
            case VarKind::T: return "t";
            case VarKind::G: return "g_{" + std::to_string(i) + "}";
            case VarKind::L: return "l_{" + std::to_string(i) + "}";
            case VarKind::Entry:
                return "z_{" + std::to_string(i >> 8) + "," + std::to_string(i & 0xff) + "}";
        }
        return "?";
    }
};

// ---------------------------------------------------------------------------
// Monomials

struct Monomial {
    // (variable, exponent) pairs sorted by variable code; exponents > 0
    std::vector<std::pair<Var, int>> factors;

    static Monomial one() { return {}; }
    static Monomial var(Var v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.factors.emplace_back(v, exp);
        return m;
    }

    bool is_one() const { return factors.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : factors) d += e;
        return d;
    }

    int exponent(Var v) const {
        for (const auto& [w, e] : factors)
            if (w == v) return e;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.factors.reserve(factors.size() + o.factors.size());
        std::size_t a = 0, b = 0;
        while (a < factors.size() || b < o.factors.size()) {
            if (b == o.factors.size() || (a < factors.size() && factors[a].first < o.factors[b].first))
                r.factors.push_back(factors[a++]);
            else if (a == factors.size() || o.factors[b].first < factors[a].first)
                r.factors.push_back(o.factors[b++]);
            else {
                r.factors.emplace_back(factors[a].first, factors[a].second + o.factors[b].second);
                ++a, ++b;
            }
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        std::size_t b = 0;
        for (const auto& [v, e] : factors) {
            while (b < o.factors.size() && o.factors[b].first < v) ++b;
            if (b == o.factors.size() || o.factors[b].first != v || o.factors[b].second < e) return false;
        }
        return true;
    }

    // requires divides(o) == false is caller's problem; asserts via exception
    Monomial quotient_into(const Monomial& o) const {
        Monomial r;
        std::size_t a = 0;
        for (const auto& [v, e] : o.factors) {
            int sub = 0;
            if (a < factors.size() && factors[a].first == v) sub = factors[a++].second;
            if (sub > e) throw NotDivisible("monomial quotient has a negative exponent");
            if (e - sub > 0) r.factors.emplace_back(v, e - sub);
        }
        if (a != factors.size()) throw NotDivisible("monomial quotient has a negative exponent");
        return r;
    }

    bool operator==(const Monomial& o) const { return factors == o.factors; }

    // graded lex: total degree first, ties broken on the most significant
    // variable (smallest code) with a larger exponent
    bool operator<(const Monomial& o) const {
        const int da = degree(), db = o.degree();
        if (da != db) return da < db;
        std::size_t a = 0, b = 0;
        while (a < factors.size() && b < o.factors.size()) {
            if (factors[a].first != o.factors[b].first)
                // the side whose next significant variable comes earlier has
                // a positive exponent where the other has zero => it is larger
                return factors[a].first > o.factors[b].first;
            if (factors[a].second != o.factors[b].second)
                return factors[a].second < o.factors[b].second;
            ++a, ++b;
        }
        return a == factors.size() && b != o.factors.size() ? true : false;
    }
};

// ---------------------------------------------------------------------------
// Polynomials

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;

    static MultiPoly zero() { return {}; }
    static MultiPoly constant(const Rational& c) {
        MultiPoly p;
        if (c != 0) p.terms_[Monomial::one()] = c;
        return p;
    }
    static MultiPoly variable(Var v, int exp = 1) {
        MultiPoly p;
        p.terms_[Monomial::var(v, exp)] = 1;
        return p;
    }
    static MultiPoly term(const Monomial& m, const Rational& c) {
        MultiPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        // iterate the smaller operand outside
        const MultiPoly& s = a.size() <= b.size() ? a : b;
        const MultiPoly& l = a.size() <= b.size() ? b : a;
        for (const auto& [ms, cs] : s.terms_)
            for (const auto& [ml, cl] : l.terms_)
                r.add_term(ms.times(ml), cs * cl);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& scale(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [m, coef] : terms_) coef *= c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a.scale(c); }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a.scale(c); }

    MultiPoly pow(int k) const {
        if (k < 0) throw InvalidPower("negative polynomial power");
        MultiPoly r = constant(1);
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base = (k >>= 1) > 0 ? base * base : base;
        }
        return r;
    }

    // leading term in graded-lex order
    std::pair<Monomial, Rational> leading() const {
        if (terms_.empty()) throw Error("leading term of the zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return std::prev(terms_.end())->first.degree();
    }

    int degree_in(Var v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
        return d;
    }

    // coefficient of v^k, as a polynomial in the remaining variables
    MultiPoly coefficient_of(Var v, int k) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.exponent(v) != k) continue;
            Monomial rest;
            for (const auto& f : m.factors)
                if (f.first != v) rest.factors.push_back(f);
            r.add_term(rest, c);
        }
        return r;
    }

    bool contains_var(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) > 0) return true;
        return false;
    }

    std::vector<Var> variables() const {
        std::vector<Var> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    Rational eval(const std::map<Var, Rational>& assignment) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (const auto& [var, exp] : m.factors) {
                auto it = assignment.find(var);
                if (it == assignment.end())
                    throw MissingVariable("no value assigned to " + VarNames{}.text(var));
                for (int k = 0; k < exp; ++k) v *= it->second;
            }
            total += v;
        }
        return total;
    }

    // simultaneous substitution; variables absent from `rules` pass through
    MultiPoly substitute(const std::map<Var, MultiPoly>& rules) const {
        // cache powers of each replacement
        std::map<Var, std::vector<MultiPoly>> powers;
        MultiPoly total;
        for (const auto& [m, c] : terms_) {
            MultiPoly prod = constant(c);
            Monomial passthrough;
            for (const auto& [var, exp] : m.factors) {
                auto it = rules.find(var);
                if (it == rules.end()) {
                    passthrough.factors.emplace_back(var, exp);
                    continue;
                }
                auto& cache = powers[var];
                if (cache.empty()) cache.push_back(constant(1));
                while (static_cast<int>(cache.size()) <= exp)
                    cache.push_back(cache.back() * it->second);
                prod *= cache[exp];
            }
            if (!passthrough.is_one()) prod *= term(passthrough, 1);
            total += prod;
        }
        return total;
    }

    // exact multivariate division; throws NotDivisible when no quotient exists
    friend MultiPoly exact_div(const MultiPoly& numerator, const MultiPoly& denominator) {
        if (denominator.is_zero()) throw Error("division by the zero polynomial");
        MultiPoly q;
        MultiPoly r = numerator;
        const auto [dlm, dlc] = denominator.leading();
        while (!r.is_zero()) {
            const auto [rlm, rlc] = r.leading();
            if (!dlm.divides(rlm)) throw NotDivisible("leading term " + r.text() + " not divisible");
            const Monomial qm = dlm.quotient_into(rlm);
            const Rational qc = rlc / dlc;
            q.add_term(qm, qc);
            // r -= (qc * qm) * denominator
            for (const auto& [m, c] : denominator.terms_) r.add_term(qm.times(m), -qc * c);
        }
        return q;
    }

    // --- output ---------------------------------------------------------

    std::string text(const VarNames& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            const Rational ac = c < 0 ? Rational(-c) : c;
            const bool unit = ac == 1 && !it->first.is_one();
            if (!unit) os << ac.str();
            bool star = !unit;
            for (const auto& [v, e] : it->first.factors) {
                if (star) os << "*";
                star = true;
                os << names.text(v);
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

    std::string latex(const VarNames& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? "-" : "+");
            }
            first = false;
            const Rational ac = c < 0 ? Rational(-c) : c;
            const bool unit = ac == 1 && !it->first.is_one();
            if (!unit) {
                if (den(ac) == 1) os << num(ac).str();
                else os << "\\tfrac{" << num(ac).str() << "}{" << den(ac).str() << "}";
            }
            for (const auto& [v, e] : it->first.factors) {
                os << names.latex(v);
                if (e > 1) {
                    os << "^";
                    if (e < 10) os << e;
                    else os << "{" << e << "}";
                }
            }
        }
        return os.str();
    }

    // list of {"exps": {name: exp}, "num": "...", "den": "..."}, leading term first
    nlohmann::ordered_json to_json(const VarNames& names = {}) const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            nlohmann::ordered_json exps = nlohmann::ordered_json::object();
            for (const auto& [v, e] : it->first.factors) exps[names.text(v)] = e;
            arr.push_back({{"exps", std::move(exps)},
                           {"num", num(it->second).str()},
                           {"den", den(it->second).str()}});
        }
        return arr;
    }

private:
    TermMap terms_;
};

inline MultiPoly operator+(const MultiPoly& a, const Rational& c) { return a + MultiPoly::constant(c); }
inline MultiPoly operator-(const MultiPoly& a, const Rational& c) { return a - MultiPoly::constant(c); }

} // namespace liechar

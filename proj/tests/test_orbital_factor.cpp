#include <catch2/catch_amalgamated.hpp>

#include <liechar/orbital_factor.hpp>

using namespace liechar;

namespace {

MultiPoly z(int k = 1) { return MultiPoly::variable(z0_var(), k); }
MultiPoly ev(int i) { return MultiPoly::variable(e_var(i)); }
MultiPoly sb(int i) { return MultiPoly::variable(sbar_var(i)); }
MultiPoly gv(int i) { return MultiPoly::variable(g_var(i)); }
MultiPoly lv(int i) { return MultiPoly::variable(l_var(i)); }

}  // namespace

TEST_CASE("rank-two special linear orbital factors in closed form") {
    const auto rs = build(parse_lie_type("A2"));

    const auto f10 = orbital_factor(rs, Weight({1, 0}));
    CHECK(f10.degree == 3);
    CHECK(f10.poly == z(3) + ev(2) * z() + ev(3));

    const auto f01 = orbital_factor(rs, Weight({0, 1}));
    CHECK(f01.degree == 3);
    CHECK(f01.poly == z(3) + ev(2) * z() - ev(3));

    // adjoint factor
    const auto f11 = orbital_factor(rs, Weight({1, 1}));
    CHECK(f11.degree == 6);
    CHECK(f11.poly == z(6) + Rational(6) * ev(2) * z(4) + Rational(9) * ev(2).pow(2) * z(2) +
                          Rational(4) * ev(2).pow(3) + Rational(27) * ev(3).pow(2));

    // the zero weight contributes the bare linear factor
    const auto f00 = orbital_factor(rs, Weight({0, 0}));
    CHECK(f00.degree == 1);
    CHECK(f00.poly == z());
}

TEST_CASE("rank-two orthogonal orbital factors in closed form") {
    const auto rs = build(parse_lie_type("B2"));

    const auto f10 = orbital_factor(rs, Weight({1, 0}));
    CHECK(f10.degree == 4);
    CHECK(f10.poly == z(4) - sb(1) * z(2) + sb(2));

    const auto f01 = orbital_factor(rs, Weight({0, 1}));
    CHECK(f01.degree == 4);
    CHECK(f01.poly == z(4) - Rational(1, 2) * sb(1) * z(2) +
                          Rational(1, 16) * (sb(1).pow(2) - Rational(4) * sb(2)));

    const auto f02 = orbital_factor(rs, Weight({0, 2}));
    CHECK(f02.degree == 4);
    CHECK(f02.poly == z(4) - Rational(2) * sb(1) * z(2) + sb(1).pow(2) - Rational(4) * sb(2));
}

TEST_CASE("exceptional orbital factors in closed form") {
    const auto rs = build(parse_lie_type("G2"));

    const auto f10 = orbital_factor(rs, Weight({1, 0}));
    CHECK(f10.degree == 6);
    CHECK(f10.poly == z(6) + Rational(2) * gv(2) * z(4) + gv(2).pow(2) * z(2) - gv(6));

    const auto f01 = orbital_factor(rs, Weight({0, 1}));
    CHECK(f01.degree == 6);
    CHECK(f01.poly == z(6) + Rational(6) * gv(2) * z(4) + Rational(9) * gv(2).pow(2) * z(2) +
                          Rational(4) * gv(2).pow(3) + Rational(27) * gv(6));
}

TEST_CASE("orbital factor degree equals the orbit size") {
    for (const char* s : {"A3", "B3", "C3", "D4"}) {
        const auto rs = build(parse_lie_type(s));
        for (int i = 0; i < rs.rank(); ++i) {
            std::vector<int> c(rs.rank(), 0);
            c[i] = 1;
            const Weight w(c);
            const auto f = orbital_factor(rs, w);
            const auto o = orbit(rs, w);
            CHECK(f.degree == static_cast<int>(o.size()));
            CHECK(f.poly.degree_in(z0_var()) == f.degree);
            // monic in z0
            CHECK(f.poly.coefficient_of(z0_var(), f.degree) == MultiPoly::constant(1));
        }
    }
}

TEST_CASE("orbital factors reject non-dominant weights") {
    const auto rs = build(parse_lie_type("A2"));
    CHECK_THROWS_AS(orbital_factor(rs, Weight({-1, 1})), NotDominant);
    CHECK_THROWS_AS(orbital_factor_symbolic(rs, Weight({0, -1})), NotDominant);
}

TEST_CASE("symbolic factors specialize to concrete ones") {
    struct Case {
        const char* type;
        std::vector<int> pattern;
        std::vector<int> concrete;
    };
    const std::vector<Case> cases = {
        {"A2", {1, 0}, {3, 0}},  {"A2", {1, 1}, {2, 1}},  {"B2", {1, 0}, {2, 0}},
        {"B2", {1, 1}, {1, 2}},  {"C2", {0, 1}, {0, 2}},  {"G2", {1, 0}, {2, 0}},
        {"A3", {1, 0, 1}, {1, 0, 2}},
    };
    for (const auto& c : cases) {
        const auto rs = build(parse_lie_type(c.type));
        const auto sym = orbital_factor_symbolic(rs, Weight(c.pattern));
        const auto con = orbital_factor(rs, Weight(c.concrete));
        REQUIRE(sym.degree == con.degree);
        std::map<Var, MultiPoly> at;
        for (int i = 0; i < rs.rank(); ++i)
            at.emplace(l_var(i + 1), MultiPoly::constant(c.concrete[i]));
        CHECK(sym.poly.substitute(at) == con.poly);
    }
}

TEST_CASE("one-parameter orthogonal family in closed form") {
    const auto rs = build(parse_lie_type("B2"));
    const auto f = orbital_factor_symbolic(rs, Weight({1, 0}));
    CHECK(f.degree == 4);
    CHECK(f.poly == z(4) - sb(1) * lv(1).pow(2) * z(2) + sb(2) * lv(1).pow(4));
}

TEST_CASE("assembled products cover the module dimension") {
    SECTION("adjoint of the rank-two special linear algebra") {
        const auto rs = build(parse_lie_type("A2"));
        const auto fc = assemble(rs, {Weight({1, 1})});
        CHECK(fc.total_degree() == 8);
        REQUIRE(fc.factors.size() == 2);
        CHECK(fc.factors[0].first.mu == Weight({1, 1}));
        CHECK(fc.factors[0].second == 1);
        CHECK(fc.factors[1].first.mu == Weight({0, 0}));
        CHECK(fc.factors[1].second == 2);
        CHECK(fc.expand() == fc.factors[0].first.poly * z(2));
    }

    SECTION("direct sums merge multiplicities across summands") {
        const auto rs = build(parse_lie_type("A2"));
        const auto fc = assemble(rs, {Weight({1, 0}), Weight({1, 0}), Weight({0, 1})});
        CHECK(fc.total_degree() == 9);
        REQUIRE(fc.factors.size() == 2);
        CHECK(fc.factors[0].second == 2);
        CHECK(fc.factors[1].second == 1);
    }

    SECTION("27-dimensional module") {
        const auto rs = build(parse_lie_type("A2"));
        const auto fc = assemble(rs, {Weight({2, 2})});
        CHECK(fc.total_degree() == 27);
        Integer deg = 0;
        for (const auto& [f, m] : fc.factors) deg += Integer(f.degree) * m;
        CHECK(deg == 27);
    }
}

TEST_CASE("division route matches the direct orbit product") {
    struct Case {
        const char* type;
        std::vector<int> lambda;
    };
    // the last case is large enough to take the top-window route instead of
    // the full expansion
    for (const auto& c : {Case{"A2", {1, 1}}, Case{"A2", {2, 0}}, Case{"A2", {2, 2}},
                          Case{"B2", {0, 2}}, Case{"B2", {1, 1}}, Case{"G2", {1, 0}},
                          Case{"A3", {1, 0, 1}}, Case{"A2", {4, 4}}}) {
        const auto rs = build(parse_lie_type(c.type));
        const Weight lambda(c.lambda);
        const auto direct = orbital_factor(rs, lambda);
        const auto divided = factor_by_division(rs, lambda);
        CHECK(divided.degree == direct.degree);
        CHECK(divided.poly == direct.poly);
    }
}

TEST_CASE("rank-one closed form lists the even ladder") {
    const MultiPoly disc = MultiPoly::variable(entry_var(1, 1), 2) +
                           MultiPoly::variable(entry_var(1, 2)) * MultiPoly::variable(entry_var(2, 1));

    // trivial module
    CHECK(sl2_closed_form({Integer(1)}) == z(1));
    // two-dimensional module: z0^2 - (z11^2 + z12 z21)
    CHECK(sl2_closed_form({Integer(0), Integer(1)}) == z(2) - disc);
    // three-dimensional module
    CHECK(sl2_closed_form({Integer(1), Integer(0), Integer(1)}) ==
          z(1) * (z(2) - Rational(4) * disc));
    // empty multiplicity vector
    CHECK(sl2_closed_form({}) == MultiPoly::constant(1));

    // the closed form for the five-dimensional module matches the orbit engine
    const auto rs = build(parse_lie_type("A1"));
    const auto fc = assemble(rs, {Weight({4})});
    MultiPoly expanded = fc.expand();
    // translate the rank-one generator e2 into the matrix entries: e2 = -(z11^2 + z12 z21)
    expanded = expanded.substitute({{e_var(2), -disc}});
    CHECK(expanded == sl2_closed_form({Integer(1), Integer(0), Integer(1), Integer(0), Integer(1)}));
}

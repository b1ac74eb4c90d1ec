#include <catch2/catch_amalgamated.hpp>

#include <liechar/invariant_reduce.hpp>

#include <random>

using namespace liechar;

namespace {

MultiPoly th(int i) { return MultiPoly::variable(theta_var(i)); }

// random polynomial in the given variables: a few terms, small exponents
MultiPoly random_in_vars(const std::vector<Var>& vars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(2, 5), expo(0, 2), coeff(-6, 6);
    MultiPoly q;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (Var v : vars) {
            const int e = expo(rng);
            if (e > 0) m.factors.emplace_back(v, e);
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        q.add_term(m, c);
    }
    return q;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric(0, 3) == MultiPoly::constant(1));
    CHECK(elementary_symmetric(1, 3) == th(1) + th(2) + th(3));
    CHECK(elementary_symmetric(2, 3) == th(1) * th(2) + th(1) * th(3) + th(2) * th(3));
    CHECK(elementary_symmetric(3, 3) == th(1) * th(2) * th(3));
    CHECK(elementary_symmetric(4, 3).is_zero());
    CHECK(elementary_symmetric(-1, 3).is_zero());
    CHECK(elementary_symmetric(2, 5).terms().size() == 10);
}

TEST_CASE("theta permutation acts on indices and leaves other variables alone") {
    const MultiPoly p = th(1).pow(2) * th(3) + MultiPoly::variable(z0_var()) * th(2);
    const MultiPoly q = permute_thetas(p, {2, 3, 1});  // 1->2, 2->3, 3->1
    CHECK(q == th(2).pow(2) * th(1) + MultiPoly::variable(z0_var()) * th(3));
    // identity permutation is a no-op
    CHECK(permute_thetas(p, {1, 2, 3}) == p);
}

TEST_CASE("symmetry violation finds the first breaking transposition") {
    CHECK(symmetric_violation(elementary_symmetric(2, 4), 4) == 0);
    CHECK(symmetric_violation(th(1) - th(2), 2) == 1);
    CHECK(symmetric_violation(th(1) + th(2) + th(3).pow(2), 3) == 2);
    CHECK(symmetric_violation(MultiPoly::constant(5), 3) == 0);
}

TEST_CASE("symmetric polynomials rewrite in the elementary basis") {
    SECTION("power sums") {
        // th1^2 + th2^2 = e1^2 - 2 e2
        const MultiPoly p = th(1).pow(2) + th(2).pow(2);
        const MultiPoly e1 = MultiPoly::variable(e_var(1));
        const MultiPoly e2 = MultiPoly::variable(e_var(2));
        CHECK(reduce_symmetric(p, 2) == e1.pow(2) - Rational(2) * e2);
    }
    SECTION("coefficients in other variables ride along") {
        const MultiPoly z = MultiPoly::variable(z0_var());
        const MultiPoly p = z * (th(1) + th(2)) + z.pow(3);
        const MultiPoly r = reduce_symmetric(p, 2);
        CHECK(r == z * MultiPoly::variable(e_var(1)) + z.pow(3));
    }
    SECTION("asymmetric input is rejected") {
        CHECK_THROWS_AS(reduce_symmetric(th(1) * th(2).pow(2), 2), NotSymmetric);
    }
    SECTION("round trips through the defining substitution") {
        std::mt19937_64 rng(2024);
        for (int n : {2, 3, 4}) {
            std::vector<Var> vars;
            std::map<Var, MultiPoly> defs;
            for (int i = 1; i <= n; ++i) {
                vars.push_back(e_var(i));
                defs.emplace(e_var(i), elementary_symmetric(i, n));
            }
            for (int trial = 0; trial < 25; ++trial) {
                const MultiPoly q = random_in_vars(vars, rng);
                CHECK(reduce_symmetric(q.substitute(defs), n) == q);
            }
        }
    }
}

TEST_CASE("even symmetric polynomials rewrite in squared-variable elementaries") {
    const auto sb = [](int i) { return MultiPoly::variable(sbar_var(i)); };

    SECTION("sum of squares") {
        const MultiPoly p = th(1).pow(2) + th(2).pow(2) + th(3).pow(2);
        CHECK(reduce_bc(p, 3) == sb(1));
    }
    SECTION("product of squares") {
        const MultiPoly p = th(1).pow(2) * th(2).pow(2);
        CHECK(reduce_bc(p, 2) == sb(2));
    }
    SECTION("odd exponents are rejected") {
        CHECK_THROWS_AS(reduce_bc(th(1) + th(2), 2), NotInvariant);
        CHECK_THROWS_AS(reduce_bc(th(1).pow(2) * th(2), 2), NotInvariant);
    }
    SECTION("asymmetric input is rejected") {
        CHECK_THROWS_AS(reduce_bc(th(1).pow(2) + Rational(2) * th(2).pow(2), 2), NotInvariant);
    }
}

TEST_CASE("even orthogonal reducer splits parity and introduces the product generator") {
    const MultiPoly t = MultiPoly::variable(t_var());

    SECTION("the all-variables product maps to the product generator") {
        CHECK(reduce_d(th(1) * th(2), 2) == t);
        CHECK(reduce_d(th(1) * th(2) * th(3), 3) == t);
    }
    SECTION("the squared product maps to the generator squared") {
        CHECK(reduce_d(th(1).pow(2) * th(2).pow(2), 2) == t.pow(2));
    }
    SECTION("mixed parity monomials are rejected") {
        CHECK_THROWS_AS(reduce_d(th(1).pow(2) * th(2), 2), MixedParity);
    }
    SECTION("even part agrees with the squared-elementary reduction") {
        const MultiPoly p = th(1).pow(2) + th(2).pow(2) + th(3).pow(2);
        CHECK(reduce_d(p, 3) == MultiPoly::variable(sbar_var(1)));
    }
}

TEST_CASE("exceptional reducer rewrites in the quadratic and sextic generators") {
    const MultiPoly g2 = MultiPoly::variable(g_var(2));
    const MultiPoly g6 = MultiPoly::variable(g_var(6));

    CHECK(reduce_g2(elementary_symmetric(2, 3)) == g2);
    CHECK(reduce_g2(elementary_symmetric(3, 3).pow(2)) == g6);
    CHECK(reduce_g2(elementary_symmetric(2, 3).pow(2) + elementary_symmetric(3, 3).pow(2)) ==
          g2.pow(2) + g6);
    // terms divisible by the first elementary are dropped (trace-zero locus)
    CHECK(reduce_g2(elementary_symmetric(1, 3) * elementary_symmetric(1, 3)).is_zero());

    CHECK_THROWS_AS(reduce_g2(th(1) + th(2) + th(3)), NotInvariant);   // odd degree
    CHECK_THROWS_AS(reduce_g2(th(1).pow(2)), NotInvariant);            // not symmetric
}

TEST_CASE("generator sets per type") {
    SECTION("special linear drops the first elementary") {
        const auto g = generator_set(parse_lie_type("A2"));
        REQUIRE(g.generators.size() == 2);
        CHECK(g.generators[0] == e_var(2));
        CHECK(g.generators[1] == e_var(3));
        CHECK(g.theta_definitions.at(e_var(2)) == elementary_symmetric(2, 3));
        CHECK(g.weighted_degree.at(e_var(3)) == 3);
    }
    SECTION("odd orthogonal and symplectic use squared elementaries") {
        for (const char* s : {"B3", "C3"}) {
            const auto g = generator_set(parse_lie_type(s));
            REQUIRE(g.generators.size() == 3);
            for (int i = 1; i <= 3; ++i) {
                CHECK(g.generators[i - 1] == sbar_var(i));
                CHECK(g.weighted_degree.at(sbar_var(i)) == 2 * i);
            }
            CHECK(g.theta_definitions.at(sbar_var(1)) ==
                  th(1).pow(2) + th(2).pow(2) + th(3).pow(2));
        }
    }
    SECTION("even orthogonal swaps the top elementary for the product") {
        const auto g = generator_set(parse_lie_type("D4"));
        REQUIRE(g.generators.size() == 4);
        CHECK(g.generators[3] == t_var());
        CHECK(g.weighted_degree.at(t_var()) == 4);
        CHECK(g.theta_definitions.at(t_var()) == th(1) * th(2) * th(3) * th(4));
    }
    SECTION("exceptional rank two") {
        const auto g = generator_set(parse_lie_type("G2"));
        REQUIRE(g.generators.size() == 2);
        CHECK(g.generators[0] == g_var(2));
        CHECK(g.generators[1] == g_var(6));
        CHECK(g.weighted_degree.at(g_var(6)) == 6);
    }
}

TEST_CASE("reduction round trips through the generator definitions") {
    std::mt19937_64 rng(77);
    for (const char* s : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "D4", "G2"}) {
        const auto t = parse_lie_type(s);
        const auto g = generator_set(t);
        for (int trial = 0; trial < 20; ++trial) {
            const MultiPoly q = random_in_vars(g.generators, rng);
            const MultiPoly p = q.substitute(g.theta_definitions);
            CHECK(reduce_invariant(t, p) == q);
        }
    }
}

TEST_CASE("type dispatch drops trace terms for the special linear family") {
    const auto a1 = parse_lie_type("A1");
    // th1 + th2 is e1, which vanishes on the trace-zero locus
    CHECK(reduce_invariant(a1, th(1) + th(2)).is_zero());
    CHECK(reduce_invariant(a1, th(1) * th(2)) == MultiPoly::variable(e_var(2)));
    // (th1 + th2)^2 reduces to e1^2 which is dropped entirely
    CHECK(reduce_invariant(a1, (th(1) + th(2)).pow(2)).is_zero());
}

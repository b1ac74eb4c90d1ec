#include <catch2/catch_amalgamated.hpp>

#include <liechar/root_system.hpp>

#include <set>

using namespace liechar;

TEST_CASE("type strings parse and print back") {
    for (const char* s : {"A1", "A5", "B2", "B4", "C3", "D4", "G2"}) {
        CHECK(parse_lie_type(s).str() == s);
    }
    CHECK(parse_lie_type("a3") == parse_lie_type("A3"));
    CHECK_THROWS_AS(parse_lie_type("E8"), InvalidType);
    CHECK_THROWS_AS(parse_lie_type("Axyz"), InvalidType);
    CHECK_THROWS_AS(parse_lie_type(""), InvalidType);
}

TEST_CASE("rank limits are enforced when building") {
    for (const char* s : {"A0", "B1", "C1", "D1", "G3", "G1"}) {
        CHECK_THROWS_AS(build(parse_lie_type(s)), InvalidRank);
    }
}

TEST_CASE("Cartan matrices match the standard tables") {
    SECTION("A3 is the tridiagonal chain") {
        const auto rs = build(parse_lie_type("A3"));
        const std::vector<std::vector<int>> want{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
        CHECK(rs.cartan == want);
    }
    SECTION("B3 has the short last root") {
        const auto rs = build(parse_lie_type("B3"));
        CHECK(rs.cartan[1][2] == -2);
        CHECK(rs.cartan[2][1] == -1);
    }
    SECTION("C3 is the transpose of B3") {
        const auto b = build(parse_lie_type("B3"));
        const auto c = build(parse_lie_type("C3"));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(b.cartan[i][j] == c.cartan[j][i]);
    }
    SECTION("D4 forks at the third node") {
        const auto rs = build(parse_lie_type("D4"));
        CHECK(rs.cartan[1][3] == -1);
        CHECK(rs.cartan[3][1] == -1);
        CHECK(rs.cartan[2][3] == 0);
        CHECK(rs.cartan[3][2] == 0);
    }
    SECTION("G2 has the triple bond") {
        const auto rs = build(parse_lie_type("G2"));
        const std::vector<std::vector<int>> want{{2, -1}, {-3, 2}};
        CHECK(rs.cartan == want);
    }
}

TEST_CASE("Weyl group orders") {
    auto order = [](const char* s) { return build(parse_lie_type(s)).weyl_order; };
    CHECK(order("A1") == 2);
    CHECK(order("A2") == 6);
    CHECK(order("A4") == 120);
    CHECK(order("B2") == 8);
    CHECK(order("B3") == 48);
    CHECK(order("C4") == 384);
    CHECK(order("D4") == 192);
    CHECK(order("D5") == 1920);
    CHECK(order("G2") == 12);
}

TEST_CASE("positive root counts match dimension minus rank over two") {
    auto count = [](const char* s) { return build(parse_lie_type(s)).positive_roots.size(); };
    CHECK(count("A3") == 6);    // sl4: (16-1-3)/2
    CHECK(count("B3") == 9);    // so7: (21-3)/2
    CHECK(count("C3") == 9);    // sp6
    CHECK(count("D4") == 12);   // so8: (28-4)/2
    CHECK(count("G2") == 6);    // dim 14
}

TEST_CASE("simple reflections act through the Cartan matrix") {
    const auto rs = build(parse_lie_type("A2"));
    const Weight w({1, 0});
    const Weight r1 = simple_reflection(rs, 1, w);
    CHECK(r1 == Weight({-1, 1}));
    // reflecting twice is the identity
    CHECK(simple_reflection(rs, 1, r1) == w);
    // the second reflection fixes a weight with zero second coordinate
    CHECK(simple_reflection(rs, 2, w) == w);

    CHECK_THROWS_AS(simple_reflection(rs, 0, w), IndexOutOfRange);
    CHECK_THROWS_AS(simple_reflection(rs, 3, w), IndexOutOfRange);
}

TEST_CASE("weights compare, print, and test dominance") {
    const Weight w({2, -1, 0});
    CHECK(w.rank() == 3);
    CHECK_FALSE(w.is_dominant());
    CHECK(Weight({0, 0, 0}).is_zero());
    CHECK(Weight({1, 0}).is_dominant());
    CHECK(w.str() == "(2,-1,0)");
    CHECK(Weight({1, 2}) < Weight({2, 1}));
}

TEST_CASE("fundamental weights expand in simple roots with positive rational coordinates") {
    for (const char* s : {"A2", "B3", "C3", "D4", "G2"}) {
        const auto rs = build(parse_lie_type(s));
        const int n = rs.rank();
        REQUIRE(static_cast<int>(rs.fund_in_simple.size()) == n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(rs.fund_in_simple[i][j] > 0);
    }
}

TEST_CASE("positive roots in fundamental coordinates contain the Cartan rows") {
    const auto rs = build(parse_lie_type("A2"));
    REQUIRE(rs.positive_roots_fund.size() == 3);
    const std::set<Weight> roots(rs.positive_roots_fund.begin(), rs.positive_roots_fund.end());
    // simple roots have fundamental coordinates equal to Cartan rows
    CHECK(roots.count(Weight({2, -1})) == 1);
    CHECK(roots.count(Weight({-1, 2})) == 1);
    CHECK(roots.count(Weight({1, 1})) == 1);  // the highest root, also sum of the two
}

TEST_CASE("inner product is symmetric and positive on fundamental weights") {
    for (const char* s : {"A3", "B2", "C3", "D4", "G2"}) {
        const auto rs = build(parse_lie_type(s));
        const int n = rs.rank();
        for (int i = 0; i < n; ++i) {
            std::vector<int> ei(n, 0);
            ei[i] = 1;
            const Weight wi(ei);
            CHECK(weight_inner(rs, wi, wi) > 0);
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> ej(n, 0);
                ej[j] = 1;
                const Weight wj(ej);
                CHECK(weight_inner(rs, wi, wj) == weight_inner(rs, wj, wi));
            }
        }
    }
}

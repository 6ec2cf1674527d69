#include "legkit/hfmod.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace legkit;

TEST_CASE("duality reverses degrees", "[hfmod]") {
    // the Brieskorn pair: T(-2) + Z^(n-1) at -2  <->  T(2) + Z^(n-1) at 1
    for (int n = 2; n <= 8; ++n) {
        GradedModule minus;
        minus.add_tower(Rat(-2)).add_free(Rat(-2), n - 1);
        GradedModule plus;
        plus.add_tower(Rat(2)).add_free(Rat(1), n - 1);
        CHECK(dual(minus) == plus);
        CHECK(dual(plus) == minus);
    }
}

TEST_CASE("dual is an involution", "[hfmod]") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> deg(-8, 8), den(1, 2), cnt(0, 3), tor(2, 9);
    for (int trial = 0; trial < 200; ++trial) {
        GradedModule m;
        for (int t = cnt(rng); t > 0; --t) m.add_tower(Rat(deg(rng), den(rng)));
        for (int t = cnt(rng); t > 0; --t) m.add_free(Rat(deg(rng), den(rng)), 1 + cnt(rng));
        for (int t = cnt(rng); t > 0; --t) m.add_torsion(Rat(deg(rng), den(rng)), tor(rng));
        CHECK(dual(dual(m)) == m);
    }
}

TEST_CASE("module notation round-trips", "[hfmod]") {
    GradedModule m;
    m.add_tower(Rat(1, 2)).add_tower(Rat(3, 2)).add_free(Rat(1, 2), 3).add_torsion(Rat(-2), 4, 2);
    auto text = to_string(m);
    CHECK(text == "T(1/2) + T(3/2) + Z/4^2(-2) + Z^3(1/2)");
    CHECK(parse_module(text) == m);

    CHECK(parse_module("0") == GradedModule{});
    CHECK(to_string(GradedModule{}) == "0");
    CHECK(parse_module("T(-3/2)+T(-1/2)") == parse_module("T(-1/2) + T(-3/2)"));

    std::mt19937 rng(654);
    std::uniform_int_distribution<int> deg(-6, 6), den(1, 2), cnt(0, 3), tor(2, 5);
    for (int trial = 0; trial < 200; ++trial) {
        GradedModule g;
        for (int t = cnt(rng); t > 0; --t) g.add_tower(Rat(deg(rng), den(rng)));
        for (int t = cnt(rng); t > 0; --t) g.add_free(Rat(deg(rng), den(rng)), 1 + cnt(rng));
        for (int t = cnt(rng); t > 0; --t) g.add_torsion(Rat(deg(rng), den(rng)), tor(rng));
        CHECK(parse_module(to_string(g)) == g);
    }

    CHECK_THROWS_AS(parse_module(""), parse_error);
    CHECK_THROWS_AS(parse_module("T(1/0)"), parse_error);
    CHECK_THROWS_AS(parse_module("Q(1)"), parse_error);
    CHECK_THROWS_AS(parse_module("T(1) +"), parse_error);
}

TEST_CASE("image ranks solve the exactness relations", "[hfmod]") {
    auto im = image_ranks({1, 5, 4});
    CHECK(im.x == 1);
    CHECK(im.y == 4);
    CHECK(im.z == 0);
    CHECK(im.zero_ca());
    CHECK(im.injective_ab({1, 5, 4}));

    for (long long n = 1; n <= 20; ++n) {
        auto r = image_ranks({1, n + 1, n});
        CHECK(r.x == 1);
        CHECK(r.y == n);
        CHECK(r.z == 0);
    }

    auto s = image_ranks({1, 0, 1});
    CHECK(s.x == 0);
    CHECK(s.y == 0);
    CHECK(s.z == 1);

    auto z = image_ranks({0, 0, 0});
    CHECK(z.x + z.y + z.z == 0);
}

TEST_CASE("image ranks reject inconsistent triangles", "[hfmod]") {
    CHECK_THROWS_AS(image_ranks({1, 1, 1}), triangle_error);   // odd total
    CHECK_THROWS_AS(image_ranks({5, 1, 2}), triangle_error);   // inequality fails
    CHECK_THROWS_AS(image_ranks({-2, 0, 2}), triangle_error);  // negative rank
}

TEST_CASE("image rank sums and degenerate corners", "[hfmod]") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> d(0, 12);
    int done = 0;
    while (done < 300) {
        TriangleRanks t{d(rng), d(rng), d(rng)};
        try {
            auto im = image_ranks(t);
            ++done;
            CHECK(im.x + im.y == t.b);
            CHECK(im.y + im.z == t.c);
            CHECK(im.z + im.x == t.a);
            if (t.b == 0) {
                CHECK(im.z == t.c);
                CHECK(im.x == 0);
            }
        } catch (const triangle_error&) {
        }
    }
}

TEST_CASE("adjunction vanishing threshold", "[hfmod]") {
    for (int k = 0; k <= 20; ++k) CHECK(adjunction_vanishes(1, k + 1));
    CHECK(adjunction_vanishes(0, -1));
    CHECK_FALSE(adjunction_vanishes(1, 0));
    CHECK_FALSE(adjunction_vanishes(2, 2));
    CHECK(adjunction_vanishes(2, 3));
    CHECK_THROWS_AS(adjunction_vanishes(-1, 0), validation_error);
}

TEST_CASE("L-space recognition", "[hfmod]") {
    CHECK(is_l_space(5, Int(5)));        // lens space L(5,1)
    CHECK(is_l_space(1, Int(1)));        // S^3
    CHECK_FALSE(is_l_space(2, std::nullopt));  // b_1 > 0 is never an L-space
    CHECK_FALSE(is_l_space(4, Int(2)));
}

TEST_CASE("dual preserves ranks and torsion, so L-space-ness is orientation "
          "invariant", "[hfmod]") {
    auto total_free = [](const GradedModule& m) {
        int r = 0;
        for (auto& [d, p] : m.finite) r += p.free_rank;
        return r;
    };
    auto total_towers = [](const GradedModule& m) {
        int r = 0;
        for (auto& [a, k] : m.towers) r += k;
        return r;
    };
    auto torsion_bag = [](const GradedModule& m) {
        std::multiset<Int> bag;
        for (auto& [d, p] : m.finite)
            for (auto& t : p.torsion) bag.insert(t);
        return bag;
    };
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> deg(-6, 6), den(1, 2), cnt(0, 3), tor(2, 7);
    for (int trial = 0; trial < 100; ++trial) {
        GradedModule m;
        for (int t = cnt(rng); t > 0; --t) m.add_tower(Rat(deg(rng), den(rng)));
        for (int t = cnt(rng); t > 0; --t) m.add_free(Rat(deg(rng), den(rng)), 1 + cnt(rng));
        for (int t = cnt(rng); t > 0; --t) m.add_torsion(Rat(deg(rng), den(rng)), tor(rng));
        auto d = dual(m);
        CHECK(total_free(d) == total_free(m));
        CHECK(total_towers(d) == total_towers(m));
        CHECK(torsion_bag(d) == torsion_bag(m));
        Int rank = total_free(m) + total_towers(m);
        Int h1 = 1 + static_cast<int>(rng() % 9);
        CHECK(is_l_space(rank, h1) ==
              is_l_space(Int(total_free(d) + total_towers(d)), h1));
    }
}

TEST_CASE("tower dichotomy", "[hfmod]") {
    CHECK(bgr_shape(1, 0) == BgrShape::SingleTower);
    CHECK(bgr_shape(2, 1) == BgrShape::TwoTowers);
    CHECK(bgr_shape(3, 0) == BgrShape::Indeterminate);
    CHECK(bgr_shape(2, 0) == BgrShape::Indeterminate);
    CHECK(bgr_shape(1, 1) == BgrShape::Indeterminate);
    CHECK_THROWS_AS(bgr_shape(1, 2), validation_error);
}

TEST_CASE("v_rank runs the triangle induction", "[hfmod]") {
    for (int k = 0; k <= 20; ++k) CHECK(v_rank(k) == 2 * k + 2);
    for (int k = 0; k < 20; ++k) CHECK(v_rank(k + 1) - v_rank(k) == 2);
    CHECK_THROWS_AS(v_rank(-1), validation_error);
}

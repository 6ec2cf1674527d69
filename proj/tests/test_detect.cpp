#include "legkit/catalog.hpp"
#include "legkit/detect.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace legkit;
namespace cat = legkit::catalog;

TEST_CASE("zig-zag detection on small words", "[detect]") {
    CHECK(find_zigzags(cat::unknot()).empty());
    CHECK(find_zigzags(cat::trefoil()).empty());
    CHECK(find_zigzags(FrontWord{}).empty());

    // the rolled stabilized unknot contains both chiralities of the wiggle,
    // sharing the middle cusp
    auto zz = find_zigzags({{Lc(1), Lc(2), Rc(3), Rc(1)}});
    REQUIRE(zz.size() == 2);
    CHECK(zz[0].component == 0);
    CHECK(zz[1].component == 0);

    // a push-off pair is not a stabilization
    CHECK(find_zigzags(pushoff(cat::unknot(), 0)).empty());
}

TEST_CASE("every stabilization is detected", "[detect]") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        auto w = oracles::random_front(rng, 2 + trial % 12);
        int nc = n_components(w);
        int c = std::uniform_int_distribution<int>(0, nc - 1)(rng);
        auto before = find_zigzags(w);
        int on_c_before = 0;
        for (auto& z : before) on_c_before += z.component == c;
        auto sw = stabilize(w, c, rng() % 2 ? 1 : -1);
        auto after = find_zigzags(sw);
        int on_c_after = 0;
        for (auto& z : after) on_c_after += z.component == c;
        CHECK(on_c_after > on_c_before);
        auto sc = stabilized_components(sw);
        CHECK(sc.count(c) == 1);
    }
}

TEST_CASE("stabilized_components separates the mixed link", "[detect]") {
    // unknot, then a stabilized unknot as a second component
    auto two = disjoint_union(cat::unknot(), cat::stabilized_unknot({1}));
    auto sc = stabilized_components(two);
    CHECK(sc == std::set<int>{1});
    CHECK(stabilized_components(FrontWord{}).empty());
}

TEST_CASE("the overtwisting configuration on the negative torus knot", "[detect]") {
    auto f = orient(cat::negative_trefoil());
    auto wtn = has_fig1_config(f, 0);
    REQUIRE(wtn.has_value());
    CHECK(wtn->kind == PatternKind::Fig1Config);
    CHECK(wtn->component == 0);
    CHECK(wtn->parity_data % 2 == 1);
    REQUIRE(wtn->event_indices.size() == 2);
    // the witness is the clasp of the fold around the eye strand
    CHECK(f.word.events[wtn->event_indices[0]].kind == EventKind::Cross);
    CHECK(f.word.events[wtn->event_indices[1]].kind == EventKind::Cross);

    // larger mirror twist knots carry the same configuration
    for (int n : {4, 6})
        CHECK(has_fig1_config(orient(cat::mirror_twist_knot(n)), 0).has_value());
}

TEST_CASE("fronts of tight +1-surgeries carry no configuration", "[detect]") {
    CHECK_FALSE(has_fig1_config(orient(cat::unknot()), 0).has_value());
    CHECK_FALSE(has_fig1_config(orient(cat::trefoil()), 0).has_value());
    for (int n : {2, 4, 6})
        for (int i = 1; i < n; ++i)
            CHECK_FALSE(has_fig1_config(orient(cat::twist_knot_realization(n, i)), 0).has_value());
}

TEST_CASE("parity flip by construction removes the witness", "[detect]") {
    // splitting a clasp strand with a cusp pair destroys the clean corridor
    auto base = cat::negative_trefoil();
    auto f = orient(base);
    auto wtn = has_fig1_config(f, 0);
    REQUIRE(wtn.has_value());
    int e1 = wtn->event_indices[0];
    // find the position of the upper clasp strand just after e1 and insert a
    // wiggle on it between the two crossings
    auto [a, b] = f.cm.event_strands[e1];
    (void)a;
    (void)b;
    FrontWord modified = base;
    int p = base.events[e1].pos;
    modified.events.insert(modified.events.begin() + e1 + 1, {Lc(p + 1), Rc(p)});
    REQUIRE(n_components(modified) == 1);
    auto wtn2 = has_fig1_config(orient(modified), 0);
    if (wtn2) {
        // any remaining witness must be a different, still-odd configuration
        CHECK(wtn2->event_indices != wtn->event_indices);
        CHECK(wtn2->parity_data % 2 == 1);
    }

    // a parallel clasp (even cusp count between the strands) never matches:
    // the trefoil's crossings pair up parallel strands only
    CHECK_FALSE(has_fig1_config(orient(cat::trefoil()), 0).has_value());
}

TEST_CASE("detectors reject unknown components", "[detect]") {
    CHECK_THROWS_AS(has_fig1_config(orient(cat::unknot()), 3), validation_error);
}

TEST_CASE("the template length is honored", "[detect]") {
    // the mirror twist knots have runs of anti-parallel crossings: the n-twist
    // region gives a run of length n, the clasp a run of length 2
    auto f4 = orient(cat::mirror_twist_knot(4));
    Fig1Template quad{4, true};
    auto w4 = has_fig1_config(f4, 0, quad);
    REQUIRE(w4.has_value());
    CHECK(w4->event_indices.size() == 4);

    // no run of length 4 exists on the n=2 form (clasp 2 + twists 2)
    CHECK_FALSE(has_fig1_config(orient(cat::negative_trefoil()), 0, quad).has_value());

    Fig1Template bad{1, true};
    CHECK_THROWS_AS(has_fig1_config(f4, 0, bad), validation_error);
}

TEST_CASE("witness parity agrees with an arc walk both ways", "[detect]") {
    // on the mirror twist knots the fold clasp has one cusp on the short arc
    auto f = orient(cat::mirror_twist_knot(4));
    auto wtn = has_fig1_config(f, 0);
    REQUIRE(wtn.has_value());
    CHECK(wtn->parity_data % 2 == 1);
}

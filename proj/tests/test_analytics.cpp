#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "chords/analytics.hpp"
#include "chords/rng.hpp"
#include "chords/sampler.hpp"

using namespace chords;

namespace {
const std::vector<std::pair<int, int>> kFig1 = {{1, 4}, {2, 5}, {3, 6}, {7, 9}, {8, 10}};
}

TEST_CASE("component decomposition") {
    ComponentSummary s = components(ChordDiagram::from_pairs(kFig1));
    REQUIRE(s.components.size() == 2);
    CHECK(s.components[0].chords == 3);
    CHECK(s.components[0].crossings == 3);
    CHECK(s.components[0].members == std::vector<int>{1, 2, 3});
    CHECK(s.components[1].chords == 2);
    CHECK(s.components[1].crossings == 1);
    CHECK(s.largest_by_chords == 0);
    CHECK(s.densest == 0);  // density 1 beats 1/2
    CHECK(s.isolated == 0);

    ComponentSummary iso = components(ChordDiagram::from_pairs({{1, 2}, {3, 4}, {5, 6}}));
    CHECK(iso.components.size() == 3);
    CHECK(iso.isolated == 3);

    ComponentSummary one = components(ChordDiagram::from_pairs({{1, 4}, {2, 5}, {3, 6}}));
    REQUIRE(one.components.size() == 1);
    CHECK(one.components[0].chords == 3);
    CHECK(one.components[0].crossings == 3);
}

TEST_CASE("graph and diagram decompositions agree") {
    CounterRng rng(21);
    for (int rep = 0; rep < 200; ++rep) {
        ChordDiagram d = random_matching(30, rng);
        ComponentSummary a = components(d);
        ComponentSummary b = components(intersection_graph(d));
        REQUIRE(a.components.size() == b.components.size());
        int total_nu = 0;
        long long total_mu = 0;
        for (size_t i = 0; i < a.components.size(); ++i) {
            CHECK(a.components[i].chords == b.components[i].chords);
            CHECK(a.components[i].crossings == b.components[i].crossings);
            CHECK(a.components[i].members == b.components[i].members);
            total_nu += a.components[i].chords;
            total_mu += a.components[i].crossings;
        }
        CHECK(total_nu == 30);
        CHECK(total_mu == crossing_count(d));
        CHECK(a.largest_by_chords == b.largest_by_chords);
        CHECK(a.densest == b.densest);
    }
}

TEST_CASE("densest component density is at least m/n") {
    CounterRng rng(31);
    for (int rep = 0; rep < 200; ++rep) {
        ChordDiagram d = random_matching(25, rng);
        long long m = crossing_count(d);
        if (m == 0) continue;
        ComponentSummary s = components(d);
        const Component& c = s.components[static_cast<size_t>(s.densest)];
        // mu/nu >= m/n, compared as cross products
        CHECK(c.crossings * 25 >= m * c.chords);
    }
}

TEST_CASE("is_monolithic") {
    CHECK_FALSE(is_monolithic(components(ChordDiagram::from_pairs(kFig1))));
    CHECK(is_monolithic(
        components(ChordDiagram::from_pairs({{1, 4}, {2, 5}, {3, 6}, {7, 8}, {9, 10}}))));
    CHECK_FALSE(is_monolithic(components(ChordDiagram::from_pairs({{1, 2}}))));
}

TEST_CASE("giant stats") {
    ComponentSummary s = components(ChordDiagram::from_pairs(kFig1));
    GiantStats g = giant_stats(s, 4);
    CHECK(g.chord_fraction == doctest::Approx(0.6));
    CHECK(g.crossing_fraction == doctest::Approx(0.75));

    ComponentSummary one = components(ChordDiagram::from_pairs({{1, 3}, {2, 4}}));
    GiantStats whole = giant_stats(one, 1);
    CHECK(whole.chord_fraction == doctest::Approx(1.0));
    CHECK(whole.crossing_fraction == doctest::Approx(1.0));

    CHECK_THROWS_AS(giant_stats(s, 0), std::domain_error);
}

TEST_CASE("tv distance") {
    EmpiricalDistribution e;
    for (int i = 0; i < 4; ++i) e.add(i % 2);
    CHECK(e.tv_distance([](int j) { return j < 2 ? 0.5 : 0.0; }) ==
          doctest::Approx(0.0).epsilon(1e-12));

    EmpiricalDistribution point;
    point.add(0);
    CHECK(point.tv_distance([](int j) { return j == 0 ? 0.25 : (j == 1 ? 0.75 : 0.0); }) ==
          doctest::Approx(0.75));
}

#include <doctest.h>

#include "fixtures.hpp"
#include "pfa/clusters.hpp"

using namespace pfa;
using fixtures::make_set;

TEST_CASE("seven-state cluster anatomy") {
    // the published 7-state anatomy drawing, 0-based: center {2,3,4,5},
    // depth 2, branches {0,1}->2 and {6}->3
    auto analysis = analyze_a_clusters(fixtures::seven_state_cluster());
    REQUIRE(analysis.clusters.size() == 1);
    const auto& c = analysis.clusters[0];
    CHECK(c.states == StateSet::full(7));
    CHECK(c.center == make_set(7, {2, 3, 4, 5}));
    CHECK(c.depth == 2);
    REQUIRE(c.branches.size() == 2);
    CHECK(c.branches[0].states == std::vector<int>{0, 1});
    CHECK(c.branches[0].destination == 2);
    CHECK(c.branches[1].states == std::vector<int>{6});
    CHECK(c.branches[1].destination == 3);
}

TEST_CASE("pure cycle has no branches") {
    auto analysis = analyze_a_clusters(fixtures::cycle3());
    REQUIRE(analysis.clusters.size() == 1);
    const auto& c = analysis.clusters[0];
    CHECK(c.center == StateSet::full(3));
    CHECK(c.depth == 0);
    CHECK(c.branches.empty());
}

TEST_CASE("T1 a-restriction") {
    auto analysis = analyze_a_clusters(fixtures::t1());
    REQUIRE(analysis.clusters.size() == 1);
    const auto& c = analysis.clusters[0];
    CHECK(c.center == make_set(3, {0, 1}));
    CHECK(c.depth == 1);
    REQUIRE(c.branches.size() == 1);
    CHECK(c.branches[0].states == std::vector<int>{2});
    CHECK(c.branches[0].destination == 0);
}

TEST_CASE("partial a is rejected") {
    Pfa a(2, LetterSet::sigma());
    a.set(0, Letter::A, 1);
    CHECK_THROWS_AS(analyze_a_clusters(a), ParamError);
}

TEST_CASE("cluster analysis properties on random functional graphs") {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng.below(20));
        Pfa a(n, LetterSet::of({Letter::A}));
        for (int q = 0; q < n; ++q)
            a.set(q, Letter::A, int(rng.below(std::uint64_t(n))));

        auto analysis = analyze_a_clusters(a);

        // clusters partition the states
        StateSet seen(n);
        int covered = 0;
        for (const auto& c : analysis.clusters) {
            CHECK_FALSE(c.states.intersects(seen));
            seen |= c.states;
            covered += c.states.count();
        }
        CHECK(covered == n);

        for (const auto& c : analysis.clusters) {
            CHECK(c.center.subset_of(c.states));
            CHECK_FALSE(c.center.empty());

            // center states cycle among themselves
            c.center.for_each([&](int q) {
                CHECK(c.center.contains(a.next(q, Letter::A)));
            });

            // walking a from any state reaches the center in at most depth
            // steps; the bound is tight for some state
            int max_dist = 0;
            c.states.for_each([&](int q) {
                int cur = q, dist = 0;
                while (!c.center.contains(cur)) {
                    cur = a.next(cur, Letter::A);
                    ++dist;
                    REQUIRE(dist <= n);
                }
                max_dist = std::max(max_dist, dist);
            });
            CHECK(max_dist == c.depth);

            // branches: grouped by first center state on the walk
            for (const auto& b : c.branches) {
                for (int q : b.states) {
                    CHECK_FALSE(c.center.contains(q));
                    int cur = q;
                    while (!c.center.contains(cur)) cur = a.next(cur, Letter::A);
                    CHECK(cur == b.destination);
                }
            }
        }
    }
}

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pfa/power_search.hpp"

using namespace pfa;

TEST_CASE("T1 shortest word") {
    auto res = shortest_careful_sync_word(fixtures::t1(), 1000);
    REQUIRE(res.status == SyncStatus::Found);
    CHECK(word_to_string(res.word) == "ab");
}

TEST_CASE("identity letter cannot merge") {
    Pfa a(2, LetterSet::of({Letter::A}));
    a.set(0, Letter::A, 0);
    a.set(1, Letter::A, 1);
    auto res = shortest_careful_sync_word(a, 1000);
    CHECK(res.status == SyncStatus::NotSynchronizing);
}

TEST_CASE("single state synchronizes on the empty word") {
    Pfa a(1, LetterSet::sigma());
    auto res = shortest_careful_sync_word(a, 1000);
    REQUIRE(res.status == SyncStatus::Found);
    CHECK(res.word.empty());
}

TEST_CASE("budget exhaustion is reported distinctly") {
    auto res = shortest_careful_sync_word(fixtures::t1(), 1);
    CHECK(res.status == SyncStatus::BudgetExceeded);
}

TEST_CASE("serial and parallel kernels agree") {
    Rng rng(909);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + int(rng.below(6));
        Pfa a = fixtures::random_pfa(rng, n);
        auto serial = shortest_careful_sync_word(a, 100'000, Exec::Serial);
        auto parallel = shortest_careful_sync_word(a, 100'000, Exec::Parallel);
        CHECK(serial.status == parallel.status);
        CHECK(serial.word == parallel.word);
        CHECK(serial.subsets_visited == parallel.subsets_visited);
    }
}

TEST_CASE("agrees with the word-enumeration oracle on tiny automata") {
    Rng rng(910);
    for (int trial = 0; trial < 300; ++trial) {
        Pfa a = fixtures::random_pfa(rng, 3);
        auto bfs = shortest_careful_sync_word(a, 100'000);
        REQUIRE(bfs.status != SyncStatus::BudgetExceeded);
        auto brute = oracle::enumerate_words(a, 7);
        CHECK(brute.synchronizing == (bfs.status == SyncStatus::Found));
        if (brute.synchronizing) CHECK(brute.word == bfs.word);
    }
}

TEST_CASE("no shorter word exists than the one returned") {
    Rng rng(911);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + int(rng.below(5));
        Pfa a = fixtures::random_pfa(rng, n);
        auto bfs = shortest_careful_sync_word(a, 100'000);
        if (bfs.status != SyncStatus::Found) continue;
        REQUIRE(oracle::word_synchronizes(a, bfs.word));
        if (bfs.word.size() > 1 && bfs.word.size() <= 12) {
            auto brute = oracle::enumerate_words(a, int(bfs.word.size()) - 1);
            CHECK_FALSE(brute.synchronizing);
        }
    }
}

TEST_CASE("agrees with the materialized power automaton") {
    Rng rng(912);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng.below(5));
        Pfa a = fixtures::random_pfa(rng, n);
        auto bfs = shortest_careful_sync_word(a, 1'000'000);
        REQUIRE(bfs.status != SyncStatus::BudgetExceeded);
        auto exact = oracle::powerset_bfs(a);
        CHECK(exact.synchronizing == (bfs.status == SyncStatus::Found));
        if (exact.synchronizing)
            CHECK(exact.shortest_length == int(bfs.word.size()));
    }
}

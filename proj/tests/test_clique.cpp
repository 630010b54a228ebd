#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "kappalab/clique.hpp"
#include "kappalab/kappa.hpp"
#include "kappalab/rng.hpp"
#include "oracles.hpp"

using namespace kappalab;

TEST_CASE("threshold graph construction on a worked triple") {
    // kappa(1,2) = 2, kappa(1,4) = 6, kappa(2,4) = 2.
    auto g = build_threshold_graph({1, 2, 4}, 2);
    CHECK(g.edge_count == 2);
    CHECK(g.adj.adjacent(0, 1));
    CHECK(g.adj.adjacent(1, 2));
    CHECK_FALSE(g.adj.adjacent(0, 2));
}

TEST_CASE("set B is complete at 3570 and empty at 1") {
    auto complete = build_threshold_graph(oracles::kSetB, 3570);
    CHECK(complete.edge_count == 1225);
    auto empty = build_threshold_graph(oracles::kSetB, 1);
    CHECK(empty.edge_count == 0);
}

TEST_CASE("threshold graph input validation") {
    CHECK_THROWS_AS(build_threshold_graph({7}, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_threshold_graph({7, 7}, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_threshold_graph({0, 7}, 10), std::invalid_argument);
}

TEST_CASE("single vertex and complete graphs") {
    AdjacencyMatrix lone(1);
    auto r = max_clique(lone);
    CHECK(r.size == 1);
    CHECK(r.proved_maximum);

    auto complete = build_threshold_graph(oracles::kSetB, 3570);
    auto all = max_clique(complete);
    CHECK(all.size == 50);
    CHECK(all.proved_maximum);
    auto sorted = oracles::kSetB;
    std::sort(sorted.begin(), sorted.end());
    CHECK(all.members == sorted);
}

TEST_CASE("solver matches exhaustive enumeration on random graphs") {
    SplitMix64 rng(0xc11c0e01);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng.below(18);
        u64 density = 20 + rng.below(70);  // percent
        std::vector<std::uint32_t> masks(n, 0);
        AdjacencyMatrix adj(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rng.below(100) < density) {
                    adj.add_edge(i, j);
                    masks[i] |= std::uint32_t{1} << j;
                    masks[j] |= std::uint32_t{1} << i;
                }
            }
        }
        auto r = max_clique(adj);
        CAPTURE(trial);
        CAPTURE(n);
        REQUIRE(r.proved_maximum);
        REQUIRE(r.size == oracles::max_clique_brute(masks));
        // Members really are pairwise adjacent.
        for (std::size_t i = 0; i < r.members.size(); ++i) {
            for (std::size_t j = i + 1; j < r.members.size(); ++j) {
                REQUIRE(adj.adjacent(r.members[i], r.members[j]));
            }
        }
    }
}

TEST_CASE("clique size is monotone in the threshold") {
    auto vals = smooth_numbers({2, 3, 5}, 40);
    std::size_t prev = 0;
    for (u128 t : {u128{2}, u128{6}, u128{30}, u128{150}, u128{1000}, u128{100000}}) {
        auto g = build_threshold_graph(vals, t);
        auto r = max_clique(g);
        REQUIRE(r.proved_maximum);
        REQUIRE(r.size >= prev);
        prev = r.size;
    }
}

TEST_CASE("relabeling vertices does not change the clique size") {
    auto vals = smooth_numbers({2, 3, 5}, 60);
    auto g1 = build_threshold_graph(vals, 360);
    std::reverse(vals.begin(), vals.end());
    auto g2 = build_threshold_graph(vals, 360);
    auto r1 = max_clique(g1);
    auto r2 = max_clique(g2);
    CHECK(r1.size == r2.size);
    CHECK(r1.members == r2.members);  // members come back sorted by value
}

TEST_CASE("witnesses satisfy the kappa threshold directly") {
    auto vals = smooth_numbers({2, 3, 5}, 120);
    auto g = build_threshold_graph(vals, 3569);
    auto r = max_clique(g);
    REQUIRE(r.proved_maximum);
    for (std::size_t i = 0; i < r.members.size(); ++i) {
        for (std::size_t j = i + 1; j < r.members.size(); ++j) {
            REQUIRE(kappa(r.members[i], r.members[j]) <= 3569);
        }
    }
}

TEST_CASE("smoke instance: 200 smallest 5-smooth numbers at 3569") {
    // Frozen from an independent exact solver run on the same graph.
    auto g = build_threshold_graph(smooth_numbers({2, 3, 5}, 200), 3569);
    auto r = max_clique(g);
    CHECK(r.size == 48);
    CHECK(r.proved_maximum);
}

TEST_CASE("node budget returns best-found without a maximality proof") {
    auto g = build_threshold_graph(smooth_numbers({2, 3, 5}, 200), 3569);
    CliqueBudget tiny;
    tiny.max_nodes = 5;
    auto r = max_clique(g, tiny);
    CHECK_FALSE(r.proved_maximum);
    CHECK(r.size >= 1);

    CliqueBudget timed;
    timed.max_seconds = 1e-9;
    auto rt = max_clique(g, timed);
    CHECK(rt.size >= 1);
}

TEST_CASE("early stop at a target size") {
    auto g = build_threshold_graph(oracles::kSetB, 3570);
    CliqueBudget b;
    b.stop_at_size = 10;
    auto r = max_clique(g, b);
    CHECK(r.size >= 10);
    CHECK_FALSE(r.proved_maximum);
}

TEST_CASE("minimax threshold search") {
    auto mm = min_threshold_for_clique(oracles::kSetB, 50);
    CHECK(mm.exact);
    CHECK(mm.t_star == 3570);
    CHECK(mm.witness.size == 50);

    auto degenerate = min_threshold_for_clique({9, 10, 11}, 1);
    CHECK(degenerate.t_star == 0);
    CHECK(degenerate.witness.size == 1);

    auto pair = min_threshold_for_clique({1, 2, 4}, 2);
    CHECK(pair.exact);
    CHECK(pair.t_star == 2);
    auto triple = min_threshold_for_clique({1, 2, 4}, 3);
    CHECK(triple.exact);
    CHECK(triple.t_star == 6);

    CHECK_THROWS_AS(min_threshold_for_clique({1, 2}, 3), std::invalid_argument);
}

TEST_CASE("minimax over the full 800-vertex 5-smooth universe") {
    auto mm = min_threshold_for_clique(smooth_numbers({2, 3, 5}, 800), 50);
    CHECK(mm.exact);
    CHECK(mm.t_star == 3570);
    CHECK(mm.witness.size >= 50);
}

TEST_CASE("minimax witness max-kappa equals t_star") {
    auto vals = smooth_numbers({2, 3, 5}, 80);
    auto mm = min_threshold_for_clique(vals, 20);
    REQUIRE(mm.exact);
    REQUIRE(mm.witness.size >= 20);
    u128 worst = 0;
    for (std::size_t i = 0; i < mm.witness.members.size(); ++i) {
        for (std::size_t j = i + 1; j < mm.witness.members.size(); ++j) {
            worst = std::max(worst, kappa(mm.witness.members[i], mm.witness.members[j]));
        }
    }
    CHECK(worst <= mm.t_star);
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "kappalab/int128.hpp"

namespace kappalab {

// Dense undirected graph as bitset rows; vertices are indices 0..n-1.
struct AdjacencyMatrix {
    std::size_t n = 0;
    std::vector<u64> rows;  // n words_per_row blocks
    std::size_t words = 0;

    explicit AdjacencyMatrix(std::size_t n_ = 0) { resize(n_); }
    void resize(std::size_t n_) {
        n = n_;
        words = (n + 63) / 64;
        rows.assign(n * words, 0);
    }
    void add_edge(std::size_t i, std::size_t j) {
        rows[i * words + j / 64] |= u64{1} << (j % 64);
        rows[j * words + i / 64] |= u64{1} << (i % 64);
    }
    bool adjacent(std::size_t i, std::size_t j) const {
        return (rows[i * words + j / 64] >> (j % 64)) & 1;
    }
    const u64* row(std::size_t i) const { return rows.data() + i * words; }
};

// Vertices are candidate integers; edge iff kappa(v_i, v_j) <= threshold.
struct ThresholdGraph {
    std::vector<u64> vertices;
    u128 threshold = 0;
    AdjacencyMatrix adj;
    std::size_t edge_count = 0;
};

ThresholdGraph build_threshold_graph(std::vector<u64> vertices, u128 threshold);

struct CliqueResult {
    std::size_t size = 0;
    std::vector<u64> members;  // vertex integers for ThresholdGraph, indices otherwise
    bool proved_maximum = false;
    std::uint64_t nodes_expanded = 0;
};

struct CliqueBudget {
    std::uint64_t max_nodes = 1'000'000'000;
    double max_seconds = 0.0;  // 0 = unlimited; checked every 2^16 nodes
    // Stop as soon as a clique of this size is known; leaves
    // proved_maximum false unless the search also exhausted.
    std::size_t stop_at_size = std::numeric_limits<std::size_t>::max();
    // Progress checkpoint for long searches, invoked every 2^24 nodes with
    // (nodes expanded, best size so far).
    std::function<void(std::uint64_t, std::size_t)> on_progress;
};

// Exact maximum clique: branch and bound with greedy-coloring upper bounds,
// deterministic tie-breaking by vertex order. Budget exhaustion returns the
// best clique found so far with proved_maximum = false.
CliqueResult max_clique(const AdjacencyMatrix& g, const CliqueBudget& budget = {});

// ThresholdGraph front end; the returned members are vertex integers and are
// recomputed pairwise against kappa (not the adjacency matrix) before being
// reported.
CliqueResult max_clique(const ThresholdGraph& g, const CliqueBudget& budget = {});

struct MinimaxResult {
    u128 t_star = 0;
    CliqueResult witness;
    bool exact = true;
    // When the node budget trips mid-search, the answer lies in
    // (bracket_lo, bracket_hi] over realized kappa values.
    u128 bracket_lo = 0;
    u128 bracket_hi = 0;
};

// Smallest t among realized kappa values whose threshold graph has a clique
// of target_size; binary search over the sorted distinct kappa values with an
// early-exit satisfiability probe at each step. target_size <= 1 returns the
// t = 0 convention with a singleton witness.
MinimaxResult min_threshold_for_clique(const std::vector<u64>& vertices,
                                       std::size_t target_size,
                                       const CliqueBudget& budget = {});

}  // namespace kappalab

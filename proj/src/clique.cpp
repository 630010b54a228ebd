#include "kappalab/clique.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kappalab/kappa.hpp"

namespace kappalab {

ThresholdGraph build_threshold_graph(std::vector<u64> vertices, u128 threshold) {
    if (vertices.size() < 2) {
        throw std::invalid_argument("build_threshold_graph: need at least two vertices");
    }
    {
        std::set<u64> uniq(vertices.begin(), vertices.end());
        if (uniq.size() != vertices.size()) {
            throw std::invalid_argument("build_threshold_graph: duplicate vertices");
        }
        if (*uniq.begin() == 0) {
            throw std::invalid_argument("build_threshold_graph: vertices must be positive");
        }
    }
    ThresholdGraph g;
    g.vertices = std::move(vertices);
    g.threshold = threshold;
    const std::size_t n = g.vertices.size();
    g.adj.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            u64 a = std::min(g.vertices[i], g.vertices[j]);
            u64 b = std::max(g.vertices[i], g.vertices[j]);
            if (kappa(a, b) <= threshold) {
                g.adj.add_edge(i, j);
                ++g.edge_count;
            }
        }
    }
    return g;
}

namespace {

// Tomita-style maximum clique: P maintained as bitsets, candidates colored
// greedily each node, vertices expanded in decreasing color order so the
// first bound failure prunes the rest of the loop.
class CliqueSolver {
public:
    CliqueSolver(const AdjacencyMatrix& g, const CliqueBudget& budget)
        : g_(g), words_(g.words), budget_(budget) {}

    CliqueResult run() {
        const std::size_t n = g_.n;
        CliqueResult result;
        if (n == 0) {
            result.proved_maximum = true;
            return result;
        }
        seed_greedy();

        std::vector<u64> all(words_, 0);
        for (std::size_t v = 0; v < n; ++v) all[v / 64] |= u64{1} << (v % 64);
        std::vector<std::size_t> r;
        r.reserve(n);
        if (!(best_.size() >= budget_.stop_at_size)) {
            expand(all, r);
        }

        result.size = best_.size();
        result.members.assign(best_.begin(), best_.end());
        result.nodes_expanded = nodes_;
        result.proved_maximum = !aborted_ && !stopped_early_;
        return result;
    }

private:
    void seed_greedy() {
        // One greedy pass for an initial lower bound.
        std::vector<u64> p(words_, 0);
        for (std::size_t v = 0; v < g_.n; ++v) p[v / 64] |= u64{1} << (v % 64);
        std::vector<std::size_t> r;
        for (;;) {
            std::size_t v = first_bit(p);
            if (v == npos) break;
            r.push_back(v);
            intersect_neighbors(p, v);
        }
        best_ = r;
        if (best_.size() >= budget_.stop_at_size) stopped_early_ = true;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t first_bit(const std::vector<u64>& bs) const {
        for (std::size_t w = 0; w < words_; ++w) {
            if (bs[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bs[w]));
        }
        return npos;
    }

    void intersect_neighbors(std::vector<u64>& bs, std::size_t v) const {
        const u64* row = g_.row(v);
        for (std::size_t w = 0; w < words_; ++w) bs[w] &= row[w];
    }

    static void clear_bit(std::vector<u64>& bs, std::size_t v) {
        bs[v / 64] &= ~(u64{1} << (v % 64));
    }

    // Greedy sequential coloring of P in index order; fills order_/color_
    // grouped by ascending color class.
    void color_sort(const std::vector<u64>& p, std::vector<std::size_t>& order,
                    std::vector<std::size_t>& color) const {
        order.clear();
        color.clear();
        std::vector<u64> remaining = p;
        std::vector<u64> cand(words_);
        std::size_t c = 0;
        while (true) {
            std::size_t v = first_bit(remaining);
            if (v == npos) break;
            ++c;
            cand = remaining;
            while ((v = first_bit(cand)) != npos) {
                order.push_back(v);
                color.push_back(c);
                clear_bit(remaining, v);
                clear_bit(cand, v);
                const u64* row = g_.row(v);
                for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~row[w];
            }
        }
    }

    void expand(std::vector<u64>& p, std::vector<std::size_t>& r) {
        if (++nodes_ > budget_.max_nodes) {
            aborted_ = true;
            return;
        }
        if (budget_.max_seconds > 0 && (nodes_ & 0xFFFF) == 0) {
            auto elapsed = std::chrono::steady_clock::now() - start_;
            if (std::chrono::duration<double>(elapsed).count() > budget_.max_seconds) {
                aborted_ = true;
                return;
            }
        }
        if (budget_.on_progress && (nodes_ & 0xFFFFFF) == 0) {
            budget_.on_progress(nodes_, best_.size());
        }
        std::vector<std::size_t> order, color;
        color_sort(p, order, color);
        std::vector<u64> next(words_);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (aborted_ || stopped_early_) return;
            if (r.size() + color[i] <= best_.size()) return;
            std::size_t v = order[i];
            r.push_back(v);
            next = p;
            intersect_neighbors(next, v);
            if (first_bit(next) == npos) {
                if (r.size() > best_.size()) {
                    best_ = r;
                    if (best_.size() >= budget_.stop_at_size) stopped_early_ = true;
                }
            } else {
                expand(next, r);
            }
            r.pop_back();
            clear_bit(p, v);
        }
    }

    const AdjacencyMatrix& g_;
    std::size_t words_;
    CliqueBudget budget_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool stopped_early_ = false;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

CliqueResult max_clique(const AdjacencyMatrix& g, const CliqueBudget& budget) {
    if (g.n == 0) {
        throw std::invalid_argument("max_clique: empty graph");
    }
    // Search on a descending-degree relabeling, ties by index.
    const std::size_t n = g.n;
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t w = 0; w < g.words; ++w) {
            degree[i] += static_cast<std::size_t>(std::popcount(g.row(i)[w]));
        }
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

    AdjacencyMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.adjacent(perm[i], perm[j])) h.add_edge(i, j);
        }
    }

    CliqueSolver solver(h, budget);
    CliqueResult result = solver.run();
    for (auto& m : result.members) m = perm[m];
    std::sort(result.members.begin(), result.members.end());
    return result;
}

CliqueResult max_clique(const ThresholdGraph& g, const CliqueBudget& budget) {
    CliqueResult result = max_clique(g.adj, budget);
    std::vector<u64> values;
    values.reserve(result.size);
    for (u64 idx : result.members) values.push_back(g.vertices[idx]);
    std::sort(values.begin(), values.end());
    // Independent recheck against kappa, not the adjacency matrix.
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (kappa(values[i], values[j]) > g.threshold) {
                throw std::logic_error("max_clique: witness failed kappa recheck");
            }
        }
    }
    result.members = std::move(values);
    return result;
}

MinimaxResult min_threshold_for_clique(const std::vector<u64>& vertices,
                                       std::size_t target_size,
                                       const CliqueBudget& budget) {
    if (vertices.empty() || vertices.size() < target_size) {
        throw std::invalid_argument("min_threshold_for_clique: need |vertices| >= target");
    }
    MinimaxResult out;
    if (target_size <= 1) {
        out.t_star = 0;
        out.witness.size = 1;
        out.witness.members = {vertices.front()};
        out.witness.proved_maximum = true;
        return out;
    }

    const std::size_t n = vertices.size();
    std::vector<u128> kappas(n * n, 0);
    std::set<u128> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            u64 a = std::min(vertices[i], vertices[j]);
            u64 b = std::max(vertices[i], vertices[j]);
            u128 k = kappa(a, b);
            kappas[i * n + j] = k;
            kappas[j * n + i] = k;
            distinct.insert(k);
        }
    }
    std::vector<u128> vals(distinct.begin(), distinct.end());

    auto probe = [&](u128 t) -> CliqueResult {
        AdjacencyMatrix adj(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (kappas[i * n + j] <= t) adj.add_edge(i, j);
            }
        }
        CliqueBudget b = budget;
        b.stop_at_size = target_size;
        return max_clique(adj, b);
    };

    // feasible(vals[hi]) with witness; everything at or below vals[lo] proved
    // infeasible. The full-threshold graph is complete, so hi starts true.
    std::ptrdiff_t lo = -1;
    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(vals.size()) - 1;
    CliqueResult hi_witness = probe(vals[static_cast<std::size_t>(hi)]);
    if (hi_witness.size < target_size) {
        throw std::logic_error("min_threshold_for_clique: complete graph probe failed");
    }
    bool budget_hit = false;
    while (lo + 1 < hi) {
        std::ptrdiff_t mid = lo + (hi - lo) / 2;
        CliqueResult r = probe(vals[static_cast<std::size_t>(mid)]);
        if (r.size >= target_size) {
            hi = mid;
            hi_witness = std::move(r);
        } else if (r.proved_maximum) {
            lo = mid;
        } else {
            budget_hit = true;
            break;
        }
    }

    out.t_star = vals[static_cast<std::size_t>(hi)];
    out.exact = !budget_hit;
    out.bracket_lo = lo >= 0 ? vals[static_cast<std::size_t>(lo)] : 0;
    out.bracket_hi = vals[static_cast<std::size_t>(hi)];
    out.witness = std::move(hi_witness);
    std::vector<u64> members;
    members.reserve(out.witness.members.size());
    for (u64 idx : out.witness.members) members.push_back(vertices[idx]);
    std::sort(members.begin(), members.end());
    out.witness.members = std::move(members);
    return out;
}

}  // namespace kappalab

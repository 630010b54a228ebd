#include "kappalab/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace kappalab {

namespace {

constexpr u64 kMaxHi = u64{1} << 52;

struct Segment {
    u64 lo;
    u64 hi;
};

std::vector<Segment> split(u64 lo, u64 hi, std::size_t entries) {
    std::vector<Segment> out;
    for (u64 s = lo; s <= hi;) {
        u64 e = (entries - 1 >= hi - s) ? hi : s + (entries - 1);
        out.push_back({s, e});
        if (e == hi) break;
        s = e + 1;
    }
    return out;
}

// Runs `work` over the segments of [lo, hi], each worker sieving
// [seg.lo, seg.hi + overlap] so windowed comparisons never cross a seam.
// Results land in per-segment slots, so the merged output is deterministic
// regardless of scheduling.
template <typename T>
std::vector<T> scan_segments(
    u64 lo, u64 hi, u64 overlap, SieveFields fields, const CensusOptions& opt,
    u64* resume_count,
    const std::function<void(u64 seg_lo, std::span<const u64> a,
                             std::span<const u64> b, std::vector<T>&)>& work) {
    if (lo < 1 || lo > hi) {
        throw std::invalid_argument("census: need 1 <= lo <= hi");
    }
    if (static_cast<u128>(hi) + overlap > kMaxHi) {
        throw std::length_error("census: range exceeds the sieve domain");
    }

    u64 start = lo;
    u64 checkpoint_count = 0;
    if (!opt.checkpoint_path.empty()) {
        std::ifstream in(opt.checkpoint_path);
        std::string line;
        u64 last_end = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            u64 seg_end = 0, count = 0;
            if (ls >> seg_end >> count) {
                last_end = seg_end;
                checkpoint_count = count;
            }
        }
        if (last_end >= start) start = last_end + 1;
    }
    if (resume_count != nullptr) *resume_count = checkpoint_count;
    if (start > hi) return {};

    const auto segments = split(start, hi, opt.sieve.segment_entries);
    std::vector<std::vector<T>> slots(segments.size());
    std::vector<char> done(segments.size(), 0);

    std::mutex frontier_mu;
    std::size_t frontier = 0;
    u64 running_count = checkpoint_count;
    std::ofstream ckpt;
    if (!opt.checkpoint_path.empty()) {
        ckpt.open(opt.checkpoint_path, std::ios::app);
    }
    auto advance_frontier = [&](std::size_t idx) {
        std::lock_guard<std::mutex> lock(frontier_mu);
        done[idx] = 1;
        while (frontier < segments.size() && done[frontier]) {
            running_count += slots[frontier].size();
            if (ckpt.is_open()) {
                ckpt << segments[frontier].hi << '\t' << running_count << '\n';
                ckpt.flush();
            }
            ++frontier;
        }
    };

    auto run_one = [&](std::size_t idx) {
        const Segment seg = segments[idx];
        u64 win_hi = std::min<u128>(static_cast<u128>(seg.hi) + overlap, kMaxHi);
        std::vector<u64> a, b;
        sieve_window(seg.lo, win_hi, fields, a, b);
        work(seg.lo, std::span<const u64>(a), std::span<const u64>(b), slots[idx]);
        advance_frontier(idx);
    };

    unsigned threads = std::max(1u, opt.threads);
    if (threads == 1 || segments.size() == 1) {
        for (std::size_t i = 0; i < segments.size(); ++i) run_one(i);
    } else {
        warm_sieve_primes(static_cast<u64>(std::min<u128>(static_cast<u128>(hi) + overlap, kMaxHi)));
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        unsigned used = std::min<std::size_t>(threads, segments.size());
        for (unsigned t = 0; t < used; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t idx = next.fetch_add(1);
                    if (idx >= segments.size()) return;
                    run_one(idx);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<T> merged;
    for (auto& slot : slots) {
        merged.insert(merged.end(), slot.begin(), slot.end());
    }
    return merged;
}

std::vector<u64> divisors_of(u64 n) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : factorize(n).factors) {
        std::size_t sz = divs.size();
        u64 pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t d = 0; d < sz; ++d) divs.push_back(divs[d] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

CensusReport enumerate_solutions(Func func, u64 k, u64 lo, u64 hi,
                                 const CensusOptions& options) {
    if (k == 0) throw std::invalid_argument("enumerate_solutions: k must be positive");
    CensusReport report;
    report.func = func;
    report.k = k;
    report.lo = lo;
    report.hi = hi;
    SieveFields fields = func == Func::Phi ? SieveFields::Phi : SieveFields::Sigma;
    auto hits = scan_segments<u64>(
        lo, hi, k, fields, options, nullptr,
        [&](u64 seg_lo, std::span<const u64> phi_vals, std::span<const u64> sigma_vals,
            std::vector<u64>& out) {
            const auto& vals = func == Func::Phi ? phi_vals : sigma_vals;
            const std::size_t len = vals.size() - static_cast<std::size_t>(k);
            for (std::size_t i = 0; i < len; ++i) {
                if (vals[i] == vals[i + k]) out.push_back(seg_lo + i);
            }
        });
    for (u64 n : hits) {
        SolutionRecord rec;
        rec.n = n;
        rec.k = k;
        rec.func = func;
        rec.verified = true;  // sieve values are the recomputation
        report.solutions.push_back(std::move(rec));
    }
    return report;
}

void classify(CensusReport& report) {
    if (report.func != Func::Phi) {
        throw std::invalid_argument("classify: only phi censuses have the GHP shape");
    }
    report.sporadic_count = 0;
    for (auto& rec : report.solutions) {
        rec.prov.kind = Provenance::Kind::Sporadic;
        const u64 n = rec.n;
        const u64 k = rec.k;
        for (u64 j : divisors_of(n)) {
            u64 jk = j + k;
            u64 q = n / j;
            if (q < 2 || !is_prime(q)) continue;
            if (rad(j) != rad(jk)) continue;
            u64 g = std::gcd(j, jk);
            u64 Jp = jk / g;
            if ((q - 1) % Jp != 0) continue;
            u64 r = (q - 1) / Jp;
            if (r == 0) continue;
            try {
                SolutionRecord replay = ghp_solution(j, k, r);
                if (replay.n == n && replay.verified) {
                    rec.prov = replay.prov;
                    break;
                }
            } catch (const ConstructionError&) {
                // gate failed for this divisor; keep scanning
            }
        }
        if (rec.prov.kind == Provenance::Kind::Sporadic) ++report.sporadic_count;
    }
    report.classified = true;
}

std::vector<u64> find_runs(u64 m, u64 lo, u64 hi, const CensusOptions& options) {
    if (m < 2) throw std::invalid_argument("find_runs: m must be at least 2");
    return scan_segments<u64>(
        lo, hi, m - 1, SieveFields::Phi, options, nullptr,
        [&](u64 seg_lo, std::span<const u64> phi_vals, std::span<const u64>,
            std::vector<u64>& out) {
            const std::size_t len = phi_vals.size() - static_cast<std::size_t>(m - 1);
            for (std::size_t i = 0; i < len; ++i) {
                bool run = true;
                for (u64 d = 1; d < m && run; ++d) {
                    run = phi_vals[i] == phi_vals[i + d];
                }
                if (run) out.push_back(seg_lo + i);
            }
        });
}

std::vector<FriendGroup> friend_groups(u64 lo, u64 hi, std::size_t min_size,
                                       const CensusOptions& options) {
    if (min_size < 2) throw std::invalid_argument("friend_groups: min_size must be >= 2");
    // Keyed by the reduced fraction; sigma fits u64 on the sieve domain.
    std::map<std::pair<u64, u64>, std::vector<u64>> buckets;
    std::mutex mu;
    scan_segments<char>(
        lo, hi, 0, SieveFields::Sigma, options, nullptr,
        [&](u64 seg_lo, std::span<const u64>, std::span<const u64> sigma_vals,
            std::vector<char>&) {
            std::map<std::pair<u64, u64>, std::vector<u64>> local;
            for (std::size_t i = 0; i < sigma_vals.size(); ++i) {
                u64 n = seg_lo + i;
                u64 g = std::gcd(sigma_vals[i], n);
                local[{sigma_vals[i] / g, n / g}].push_back(n);
            }
            std::lock_guard<std::mutex> lock(mu);
            for (auto& [key, members] : local) {
                auto& dst = buckets[key];
                dst.insert(dst.end(), members.begin(), members.end());
            }
        });

    std::vector<FriendGroup> out;
    for (auto& [key, members] : buckets) {
        if (members.size() < min_size) continue;
        std::sort(members.begin(), members.end());
        FriendGroup grp;
        grp.index = {key.first, key.second};
        grp.members = std::move(members);
        out.push_back(std::move(grp));
    }
    std::sort(out.begin(), out.end(), [](const FriendGroup& a, const FriendGroup& b) {
        return a.members.front() < b.members.front();
    });
    return out;
}

std::vector<u64> consecutive_friends(u64 lo, u64 hi, const CensusOptions& options) {
    return scan_segments<u64>(
        lo, hi, 1, SieveFields::Sigma, options, nullptr,
        [&](u64 seg_lo, std::span<const u64>, std::span<const u64> sigma_vals,
            std::vector<u64>& out) {
            const std::size_t len = sigma_vals.size() - 1;
            for (std::size_t i = 0; i < len; ++i) {
                u64 n = seg_lo + i;
                // sigma(n)/n = sigma(n+1)/(n+1), cross-multiplied exactly.
                if (static_cast<u128>(sigma_vals[i]) * (n + 1) ==
                    static_cast<u128>(sigma_vals[i + 1]) * n) {
                    out.push_back(n);
                }
            }
        });
}

}  // namespace kappalab

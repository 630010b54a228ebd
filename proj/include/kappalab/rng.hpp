#pragma once

#include <vector>

#include "kappalab/int128.hpp"

namespace kappalab {

// splitmix64; fixed across platforms so seeded runs (reproduce targets,
// property suites) emit identical output everywhere.
struct SplitMix64 {
    u64 state;

    explicit SplitMix64(u64 seed) : state(seed) {}

    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Rejection keeps it unbiased.
    u64 below(u64 bound) {
        u64 threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            u64 v = next();
            if (v >= threshold) return v % bound;
        }
    }

    // Uniform in [lo, hi], inclusive.
    u64 in_range(u64 lo, u64 hi) { return lo + below(hi - lo + 1); }

    // count distinct values in [lo, hi], ascending.
    std::vector<u64> distinct_in_range(u64 lo, u64 hi, std::size_t count);
};

}  // namespace kappalab

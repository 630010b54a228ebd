#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "kappalab/int128.hpp"

namespace kappalab {

// Which value arrays a sieve pass should fill.
enum class SieveFields { Phi, Sigma, Both };

struct SieveBudget {
    std::size_t segment_entries = std::size_t{1} << 22;  // per-segment window
    std::size_t max_entries = std::size_t{1} << 24;      // whole-result arrays
};

struct PhiSigmaTable {
    u64 lo = 1;
    std::vector<u64> phi;    // phi[i] = phi(lo + i)
    std::vector<u64> sigma;  // sigma[i] = sigma(lo + i)
};

// Values of phi and sigma over [lo, hi], both inclusive.
// Throws std::length_error when hi - lo + 1 exceeds budget.max_entries
// and std::domain_error outside 1 <= lo <= hi <= 2^52.
PhiSigmaTable sieve_phi_sigma(u64 lo, u64 hi, const SieveBudget& budget = {});

// Streams [lo, hi] in windows of at most budget.segment_entries. The spans
// passed to fn are valid only during the call; an unselected field is empty.
// Segments arrive in increasing order of seg_lo.
void for_each_sieve_segment(
    u64 lo, u64 hi, SieveFields fields, const SieveBudget& budget,
    const std::function<void(u64 seg_lo, std::span<const u64> phi,
                             std::span<const u64> sigma)>& fn);

// One self-contained window; used directly by parallel callers that manage
// their own segmentation.
void sieve_window(u64 lo, u64 hi, SieveFields fields, std::vector<u64>& phi_out,
                  std::vector<u64>& sigma_out);

// Builds the shared base-prime table up to sqrt(hi) once, so a pool of
// window workers never races to grow it.
void warm_sieve_primes(u64 hi);

}  // namespace kappalab

#include "kappalab/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace kappalab {

namespace {

constexpr u64 kMaxHi = u64{1} << 52;  // keeps sigma in u64 and base primes small

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Base primes up to at least `bound`, grown on demand and cached. Rebuilds
// go into a fresh table while superseded tables are retained, so references
// held by concurrently sieving workers stay valid; doubling keeps the total
// retained memory within 2x the final table.
struct PrimeTable {
    u64 limit;
    std::vector<u64> primes;
};

const std::vector<u64>& base_primes(u64 bound) {
    static std::atomic<const PrimeTable*> current{nullptr};
    static std::mutex mu;
    static std::vector<std::unique_ptr<PrimeTable>> tables;
    const PrimeTable* table = current.load(std::memory_order_acquire);
    if (table == nullptr || table->limit < bound) {
        std::lock_guard<std::mutex> lock(mu);
        table = current.load(std::memory_order_acquire);
        if (table == nullptr || table->limit < bound) {
            u64 limit = std::max<u64>(bound, 1 << 16);
            if (table != nullptr && limit < table->limit * 2) limit = table->limit * 2;
            auto next = std::make_unique<PrimeTable>(PrimeTable{limit, {}});
            std::vector<bool> composite(limit + 1, false);
            for (u64 i = 2; i <= limit; ++i) {
                if (!composite[i]) {
                    next->primes.push_back(i);
                    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
                }
            }
            current.store(next.get(), std::memory_order_release);
            table = next.get();
            tables.push_back(std::move(next));
        }
    }
    return table->primes;
}

}  // namespace

void warm_sieve_primes(u64 hi) { base_primes(isqrt_u64(std::min(hi, kMaxHi))); }

void sieve_window(u64 lo, u64 hi, SieveFields fields, std::vector<u64>& phi_out,
                  std::vector<u64>& sigma_out) {
    if (lo < 1 || lo > hi || hi > kMaxHi) {
        throw std::domain_error("sieve_window: need 1 <= lo <= hi <= 2^52");
    }
    const std::size_t m = static_cast<std::size_t>(hi - lo + 1);
    const bool want_phi = fields != SieveFields::Sigma;
    const bool want_sigma = fields != SieveFields::Phi;

    static thread_local std::vector<u64> rem;
    rem.resize(m);
    for (std::size_t i = 0; i < m; ++i) rem[i] = lo + i;
    if (want_phi) phi_out.assign(m, 1);
    if (want_sigma) sigma_out.assign(m, 1);

    const u64 root = isqrt_u64(hi);
    for (u64 p : base_primes(root)) {
        if (p > root) break;
        u64 start = ((lo + p - 1) / p) * p;
        for (u64 n = start; n <= hi; n += p) {
            std::size_t i = static_cast<std::size_t>(n - lo);
            u64 pe = 1;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                pe *= p;
            }
            if (pe > 1) {
                if (want_phi) phi_out[i] *= pe / p * (p - 1);
                // (p^(e+1)-1)/(p-1); the numerator can pass 2^64, the
                // quotient cannot (it is < 2*pe <= 2n).
                if (want_sigma) {
                    sigma_out[i] *= static_cast<u64>(
                        (static_cast<u128>(pe) * p - 1) / (p - 1));
                }
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (rem[i] > 1) {
            if (want_phi) phi_out[i] *= rem[i] - 1;
            if (want_sigma) sigma_out[i] *= rem[i] + 1;
        }
    }
}

void for_each_sieve_segment(
    u64 lo, u64 hi, SieveFields fields, const SieveBudget& budget,
    const std::function<void(u64, std::span<const u64>, std::span<const u64>)>& fn) {
    if (lo < 1 || lo > hi || hi > kMaxHi) {
        throw std::domain_error("for_each_sieve_segment: need 1 <= lo <= hi <= 2^52");
    }
    if (budget.segment_entries == 0) {
        throw std::length_error("for_each_sieve_segment: zero segment budget");
    }
    std::vector<u64> phi, sigma;
    for (u64 seg_lo = lo; seg_lo <= hi;) {
        u64 seg_hi = (budget.segment_entries - 1 >= hi - seg_lo)
                         ? hi
                         : seg_lo + (budget.segment_entries - 1);
        sieve_window(seg_lo, seg_hi, fields, phi, sigma);
        fn(seg_lo, std::span<const u64>(phi), std::span<const u64>(sigma));
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
    }
}

PhiSigmaTable sieve_phi_sigma(u64 lo, u64 hi, const SieveBudget& budget) {
    if (lo < 1 || lo > hi || hi > kMaxHi) {
        throw std::domain_error("sieve_phi_sigma: need 1 <= lo <= hi <= 2^52");
    }
    if (hi - lo + 1 > budget.max_entries) {
        throw std::length_error("sieve_phi_sigma: range exceeds memory budget");
    }
    PhiSigmaTable table;
    table.lo = lo;
    table.phi.reserve(static_cast<std::size_t>(hi - lo + 1));
    table.sigma.reserve(static_cast<std::size_t>(hi - lo + 1));
    for_each_sieve_segment(lo, hi, SieveFields::Both, budget,
                           [&](u64, std::span<const u64> phi, std::span<const u64> sigma) {
                               table.phi.insert(table.phi.end(), phi.begin(), phi.end());
                               table.sigma.insert(table.sigma.end(), sigma.begin(), sigma.end());
                           });
    return table;
}

}  // namespace kappalab

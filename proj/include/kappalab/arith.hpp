#pragma once

#include <vector>

#include "kappalab/int128.hpp"

namespace kappalab {

struct PrimePower {
    u64 p;
    int e;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n as a product of prime powers, primes strictly increasing.
// n == 1 iff factors is empty.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    u64 reassemble() const;
};

// Deterministic for all 64-bit inputs (no probabilistic error).
bool is_prime(u64 n);

// Trial division up to 10^5, then Brent-cycle Pollard rho on the cofactor.
// Domain: 1 <= n < 2^63; throws std::out_of_range otherwise.
Factorization factorize(u64 n);

u64 phi(u64 n);
u64 phi_of(const Factorization& f);

// sigma(n) < 8n for 64-bit n, so the product is accumulated (and returned)
// in 128 bits.
u128 sigma(u64 n);
u128 sigma_of(const Factorization& f);

// Product of the distinct primes dividing n; rad(1) = 1.
u64 rad(u64 n);
u64 rad_of(const Factorization& f);

// Exact reduced sigma(n)/n.
struct AbundancyIndex {
    u128 num = 1;
    u64 den = 1;

    friend bool operator==(const AbundancyIndex&, const AbundancyIndex&) = default;
    std::string str() const;  // "num/den"
};

AbundancyIndex abundancy(u64 n);

u64 gcd64(u64 a, u64 b);

}  // namespace kappalab

#pragma once

#include <cstddef>
#include <vector>

#include "kappalab/arith.hpp"
#include "kappalab/int128.hpp"

namespace kappalab {

// kappa(a,b) = (b'-a') * rad(a'b') with a' = a/gcd(a,b), b' = b/gcd(a,b).
// Always even. Requires 1 <= a < b; throws std::invalid_argument otherwise.
u128 kappa(u64 a, u64 b);

// Pairwise kappa over a candidate set, with the two aggregates the
// constructions care about: the max (smallest guaranteed k-modulus from one
// unknown good pair) and the lcm (k-modulus covering every pair). The lcm of
// an arbitrary candidate set easily leaves 128 bits; that state is carried
// explicitly and reading the value then throws, never wraps.
struct KappaTable {
    std::vector<u64> elements;
    std::vector<u128> matrix;  // row-major n*n, symmetric, zero diagonal
    u128 max_kappa = 0;
    u128 lcm_kappa = 1;  // meaningful only while !lcm_overflowed
    bool lcm_overflowed = false;

    std::size_t size() const { return elements.size(); }
    u128 at(std::size_t i, std::size_t j) const { return matrix[i * size() + j]; }
    u128 lcm() const {
        if (lcm_overflowed) throw std::overflow_error("KappaTable: lcm exceeds 128 bits");
        return lcm_kappa;
    }
};

// Throws std::invalid_argument on duplicates or fewer than two elements.
KappaTable kappa_table(std::vector<u64> elements);

// divisor | lcm{kappa(a_i,a_j)} without materializing the lcm: each prime
// power q^e of the divisor must divide some pairwise kappa. Exact at any
// lcm size.
bool pairwise_lcm_divisible(const std::vector<u64>& elements,
                            const std::vector<PrimePower>& divisor_factors);

// Factorization of a table's lcm, using only primes that divide some
// pairwise kappa (all of which fit in 64 bits). Throws when the lcm
// overflowed.
std::vector<PrimePower> factor_table_lcm(const KappaTable& table);

// The `count` smallest integers >= 1 whose prime factors all lie in
// `primes`, ascending; classic ordered multi-stream merge.
std::vector<u64> smooth_numbers(const std::vector<u64>& primes, std::size_t count);

struct LinearForm {
    u64 a = 1;       // coefficient, > 0
    long long b = 0; // offset

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct AdmissibilityResult {
    bool admissible = true;
    u64 obstruction = 0;  // the prime covering every residue, when inadmissible
};

// A system is admissible when no prime divides the product of the forms at
// every integer n. Only primes p <= (form count) can cover all residues with
// single-residue forms; a form with p | gcd(a,b) vanishes identically mod p
// and is checked separately.
AdmissibilityResult is_admissible(const std::vector<LinearForm>& forms);

}  // namespace kappalab

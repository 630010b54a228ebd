#include "kappalab/kappa.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kappalab {

u128 kappa(u64 a, u64 b) {
    if (a == 0 || a >= b) {
        throw std::invalid_argument("kappa: need 1 <= a < b");
    }
    u64 g = std::gcd(a, b);
    u64 ap = a / g;
    u64 bp = b / g;
    // a' and b' are coprime, so rad(a'b') = rad(a')rad(b'). The value can
    // pass 128 bits for coprime pairs near 2^63; that is a hard error.
    u128 r = static_cast<u128>(rad(ap)) * rad(bp);
    return checked_mul(static_cast<u128>(bp - ap), r);
}

KappaTable kappa_table(std::vector<u64> elements) {
    if (elements.size() < 2) {
        throw std::invalid_argument("kappa_table: need at least two elements");
    }
    {
        std::set<u64> uniq(elements.begin(), elements.end());
        if (uniq.size() != elements.size()) {
            throw std::invalid_argument("kappa_table: duplicate elements");
        }
        if (*uniq.begin() == 0) {
            throw std::invalid_argument("kappa_table: elements must be positive");
        }
    }
    KappaTable t;
    t.elements = std::move(elements);
    const std::size_t n = t.elements.size();
    t.matrix.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            u64 a = std::min(t.elements[i], t.elements[j]);
            u64 b = std::max(t.elements[i], t.elements[j]);
            u128 k = kappa(a, b);
            t.matrix[i * n + j] = k;
            t.matrix[j * n + i] = k;
            t.max_kappa = std::max(t.max_kappa, k);
            if (!t.lcm_overflowed) {
                try {
                    t.lcm_kappa = lcm128(t.lcm_kappa, k);
                } catch (const std::overflow_error&) {
                    t.lcm_overflowed = true;
                    t.lcm_kappa = 0;
                }
            }
        }
    }
    return t;
}

bool pairwise_lcm_divisible(const std::vector<u64>& elements,
                            const std::vector<PrimePower>& divisor_factors) {
    if (elements.size() < 2) {
        throw std::invalid_argument("pairwise_lcm_divisible: need at least two elements");
    }
    std::vector<u128> prime_powers;
    for (const auto& [p, e] : divisor_factors) {
        u128 q = 1;
        for (int i = 0; i < e; ++i) q = checked_mul(q, p);
        prime_powers.push_back(q);
    }
    std::vector<char> hit(prime_powers.size(), 0);
    std::size_t remaining = prime_powers.size();
    const std::size_t n = elements.size();
    for (std::size_t i = 0; i < n && remaining > 0; ++i) {
        for (std::size_t j = i + 1; j < n && remaining > 0; ++j) {
            u64 a = std::min(elements[i], elements[j]);
            u64 b = std::max(elements[i], elements[j]);
            u128 k = kappa(a, b);
            for (std::size_t q = 0; q < prime_powers.size(); ++q) {
                if (!hit[q] && k % prime_powers[q] == 0) {
                    hit[q] = 1;
                    --remaining;
                }
            }
        }
    }
    return remaining == 0;
}

std::vector<PrimePower> factor_table_lcm(const KappaTable& table) {
    if (table.lcm_overflowed) {
        throw std::overflow_error("factor_table_lcm: lcm exceeds 128 bits");
    }
    // The lcm's primes all divide some pairwise kappa, and every kappa came
    // from 64-bit arithmetic, so collect the prime universe from the matrix
    // entries' 64-bit-sized prime factors and divide them out of the lcm.
    std::set<u64> prime_universe;
    const std::size_t n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // kappa = (b'-a') * rad(a') * rad(b'), each factor < 2^64.
            u64 a = std::min(table.elements[i], table.elements[j]);
            u64 b = std::max(table.elements[i], table.elements[j]);
            u64 g = std::gcd(a, b);
            for (u64 part : {a / g, b / g, b / g - a / g}) {
                if (part <= 1) continue;
                for (const auto& [p, e] : factorize(part).factors) prime_universe.insert(p);
            }
        }
    }
    std::vector<PrimePower> out;
    u128 rest = table.lcm_kappa;
    for (u64 p : prime_universe) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    }
    if (rest != 1) {
        throw std::logic_error("factor_table_lcm: residue outside prime universe");
    }
    return out;
}

std::vector<u64> smooth_numbers(const std::vector<u64>& primes, std::size_t count) {
    if (primes.empty() || count == 0) {
        throw std::invalid_argument("smooth_numbers: need a prime and a positive count");
    }
    std::vector<u64> ps(primes.begin(), primes.end());
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (u64 p : ps) {
        if (!is_prime(p)) {
            throw std::invalid_argument("smooth_numbers: " + std::to_string(p) + " is not prime");
        }
    }

    std::vector<u64> out;
    out.reserve(count);
    out.push_back(1);
    // idx[k]: position in out whose product with ps[k] is the stream's next value.
    std::vector<std::size_t> idx(ps.size(), 0);
    std::vector<u128> next(ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) next[k] = ps[k];

    while (out.size() < count) {
        u128 v = next[0];
        for (std::size_t k = 1; k < ps.size(); ++k) v = std::min(v, next[k]);
        if (v > U128_MAX / 2 || v > static_cast<u128>(~u64{0})) {
            throw std::overflow_error("smooth_numbers: value exceeds 64 bits");
        }
        out.push_back(static_cast<u64>(v));
        for (std::size_t k = 0; k < ps.size(); ++k) {
            while (next[k] <= v) {
                ++idx[k];
                next[k] = static_cast<u128>(out[idx[k]]) * ps[k];
            }
        }
    }
    return out;
}

AdmissibilityResult is_admissible(const std::vector<LinearForm>& forms) {
    if (forms.empty()) {
        throw std::invalid_argument("is_admissible: empty system");
    }
    for (const auto& f : forms) {
        if (f.a == 0) throw std::invalid_argument("is_admissible: coefficients must be positive");
    }
    {
        auto sorted = forms;
        std::sort(sorted.begin(), sorted.end(),
                  [](const LinearForm& x, const LinearForm& y) {
                      return x.a != y.a ? x.a < y.a : x.b < y.b;
                  });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("is_admissible: forms must be distinct");
        }
    }

    // A form with p | a and p | b is divisible by p at every n on its own.
    // gcd(a, 0) = a covers the b = 0 case.
    for (const auto& f : forms) {
        u64 g = std::gcd(f.a, static_cast<u64>(f.b < 0 ? -f.b : f.b));
        if (g > 1) {
            return {false, factorize(g).factors.front().p};
        }
    }

    // Otherwise each form kills at most one residue class mod p, so only
    // p <= |forms| can cover them all.
    const u64 k = forms.size();
    for (u64 p = 2; p <= k; ++p) {
        if (!is_prime(p)) continue;
        bool covered_all = true;
        for (u64 n = 0; n < p && covered_all; ++n) {
            bool some_zero = false;
            for (const auto& f : forms) {
                long long v = static_cast<long long>((f.a % p) * n % p) + f.b % static_cast<long long>(p);
                if (v % static_cast<long long>(p) == 0) {
                    some_zero = true;
                    break;
                }
            }
            if (!some_zero) covered_all = false;
        }
        if (covered_all) return {false, p};
    }
    return {true, 0};
}

}  // namespace kappalab

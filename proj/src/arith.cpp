#include "kappalab/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace kappalab {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int i = 40;
    while (v != 0) {
        buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 40);
}

u128 parse_u128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_u128: empty string");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("parse_u128: non-digit");
        unsigned d = static_cast<unsigned>(c - '0');
        if (v > (U128_MAX - d) / 10) throw std::out_of_range("parse_u128: overflow");
        v = v * 10 + d;
    }
    return v;
}

u64 Factorization::reassemble() const {
    u64 v = 1;
    for (const auto& [p, e] : factors) {
        for (int i = 0; i < e; ++i) v *= p;
    }
    return v;
}

u64 gcd64(u64 a, u64 b) { return std::gcd(a, b); }

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e != 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Primes below 10^5, built once. 9592 entries.
const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        constexpr int bound = 100000;
        std::vector<bool> composite(bound + 1, false);
        std::vector<u64> out;
        for (int i = 2; i <= bound; ++i) {
            if (!composite[i]) {
                out.push_back(static_cast<u64>(i));
                for (long long j = static_cast<long long>(i) * i; j <= bound; j += i) {
                    composite[static_cast<std::size_t>(j)] = true;
                }
            }
        }
        return out;
    }();
    return primes;
}

// Strong-probable-prime test to base a; n odd, n > 2, n-1 = d*2^s.
bool sprp(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_brent(u64 n, u64 c) {
    // Brent's cycle detection with batched gcds.
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 batch = 128;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
        for (u64 k = 0; k < r && g == 1; k += batch) {
            ys = y;
            u64 lim = std::min(batch, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod(y, y, n) + c) % n;
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        // Backtrack one step at a time.
        do {
            ys = (mulmod(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = n;
    for (u64 c = 1; d == n; ++c) d = pollard_brent(n, c);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for every n < 3.3*10^24, in
    // particular for all 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!sprp(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0 || n >= (1ull << 63)) {
        throw std::out_of_range("factorize: n must satisfy 1 <= n < 2^63");
    }
    Factorization f;
    f.n = n;
    u64 cur = n;
    for (u64 p : small_primes()) {
        if (p * p > cur) break;
        if (cur % p == 0) {
            int e = 0;
            while (cur % p == 0) {
                cur /= p;
                ++e;
            }
            f.factors.push_back({p, e});
        }
    }
    if (cur > 1) {
        if (cur < 100000ull * 100000ull || is_prime(cur)) {
            // Below the trial bound squared the cofactor is prime.
            f.factors.push_back({cur, 1});
        } else {
            std::vector<u64> rest;
            factor_rec(cur, rest);
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size();) {
                std::size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                f.factors.push_back({rest[i], static_cast<int>(j - i)});
                i = j;
            }
        }
    }
    return f;
}

u64 phi_of(const Factorization& f) {
    u64 result = 1;
    for (const auto& [p, e] : f.factors) {
        u64 pe = 1;
        for (int i = 0; i < e - 1; ++i) pe *= p;
        result *= pe * (p - 1);
    }
    return result;
}

u64 phi(u64 n) { return phi_of(factorize(n)); }

u128 sigma_of(const Factorization& f) {
    u128 result = 1;
    for (const auto& [p, e] : f.factors) {
        u128 pe = 1;
        for (int i = 0; i <= e; ++i) pe *= p;
        // Cannot overflow for 64-bit n (sigma(n) < 8n), but never silently.
        result = checked_mul(result, (pe - 1) / (p - 1));
    }
    return result;
}

u128 sigma(u64 n) { return sigma_of(factorize(n)); }

u64 rad_of(const Factorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f.factors) r *= p;
    return r;
}

u64 rad(u64 n) { return rad_of(factorize(n)); }

std::string AbundancyIndex::str() const {
    return to_string(num) + "/" + std::to_string(den);
}

AbundancyIndex abundancy(u64 n) {
    u128 s = sigma(n);
    u64 g = static_cast<u64>(gcd128(s, n));
    return {s / g, n / g};
}

}  // namespace kappalab

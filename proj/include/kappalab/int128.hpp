#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kappalab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u128 U128_MAX = ~static_cast<u128>(0);

std::string to_string(u128 v);

// Parses a decimal string (digits only). Throws std::invalid_argument on
// malformed input, std::out_of_range past 2^128-1.
u128 parse_u128(std::string_view s);

constexpr u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// a*b, throwing instead of wrapping.
inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > U128_MAX / a) {
        throw std::overflow_error("128-bit multiply overflow");
    }
    return a * b;
}

// Exact lcm in 128 bits; overflow is a hard error, never silent wraparound.
inline u128 lcm128(u128 a, u128 b) {
    if (a == 0 || b == 0) {
        throw std::invalid_argument("lcm128: arguments must be positive");
    }
    return checked_mul(a / gcd128(a, b), b);
}

}  // namespace kappalab

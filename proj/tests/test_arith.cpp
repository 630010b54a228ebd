#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "kappalab/arith.hpp"
#include "kappalab/rng.hpp"
#include "oracles.hpp"

using namespace kappalab;

TEST_CASE("u128 decimal round trip") {
    CHECK(to_string(u128{0}) == "0");
    CHECK(to_string(u128{1} << 64) == "18446744073709551616");
    u128 expect = (u128{1} << 5) * 27 * 25;
    for (u64 p : {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) expect *= p;
    CHECK(parse_u128("442720643463713815200") == expect);
    CHECK(to_string(parse_u128("442720643463713815200")) == "442720643463713815200");
    CHECK(to_string(U128_MAX) == "340282366920938463463374607431768211455");
    CHECK(parse_u128(to_string(U128_MAX)) == U128_MAX);
    CHECK_THROWS_AS(parse_u128(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_u128("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_u128("340282366920938463463374607431768211456"), std::out_of_range);
}

TEST_CASE("gcd and lcm128") {
    CHECK(gcd64(15, 20) == 5);
    CHECK(gcd128(parse_u128("442720643463713815200"), 6) == 6);
    u128 big = static_cast<u128>(1) << 64;
    CHECK(lcm128(big, 3 * big) == 3 * big);
    CHECK(lcm128(4, 6) == 12);
    CHECK_THROWS_AS(lcm128(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(lcm128((u128{1} << 127), 3), std::overflow_error);
}

TEST_CASE("is_prime on known values") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(2593));   // 5186 = 2 * 2593
    CHECK_FALSE(is_prime(5187));
    CHECK(is_prime(2305843009213693951ull));       // 2^61 - 1
    CHECK(is_prime(18446744073709551557ull));      // largest 64-bit prime
    // Composites that fool weaker witness sets.
    CHECK_FALSE(is_prime(3215031751ull));          // 151 * 751 * 28351
    CHECK_FALSE(is_prime(3825123056546413051ull)); // strong pseudoprime to 2..23
    CHECK_FALSE(is_prime(561));                    // Carmichael
}

TEST_CASE("is_prime agrees with trial division") {
    for (u64 n = 0; n <= 20000; ++n) {
        CAPTURE(n);
        REQUIRE(is_prime(n) == oracles::is_prime_brute(n));
    }
}

TEST_CASE("factorize examples and domain") {
    CHECK(factorize(1).factors.empty());
    auto f = factorize(5187);
    REQUIRE(f.factors.size() == 4);
    CHECK(f.factors[0] == PrimePower{3, 1});
    CHECK(f.factors[1] == PrimePower{7, 1});
    CHECK(f.factors[2] == PrimePower{13, 1});
    CHECK(f.factors[3] == PrimePower{19, 1});
    CHECK(factorize(u64{1} << 62).factors == std::vector<PrimePower>{{2, 62}});
    CHECK_THROWS_AS(factorize(0), std::out_of_range);
    CHECK_THROWS_AS(factorize(u64{1} << 63), std::out_of_range);
}

TEST_CASE("factorize round-trips with valid prime structure") {
    auto check = [](u64 n) {
        auto f = factorize(n);
        CAPTURE(n);
        REQUIRE(f.n == n);
        REQUIRE(f.reassemble() == n);
        u64 prev = 0;
        for (const auto& [p, e] : f.factors) {
            REQUIRE(p > prev);
            REQUIRE(e >= 1);
            REQUIRE(is_prime(p));
            prev = p;
        }
        REQUIRE((n == 1) == f.factors.empty());
    };
    for (u64 n = 1; n <= 100000; ++n) check(n);
    SplitMix64 rng(0xfac70125);
    for (int i = 0; i < 1000; ++i) check(rng.in_range(1, (u64{1} << 60) - 1));
    // Stress shapes: semiprimes with large prime factors, prime squares.
    check(2305843009213693951ull);            // Mersenne prime
    check(2305843009213693951ull - 1);
    check(2147483647ull * 2147483647ull);     // square of 2^31 - 1
    check(2147483647ull * 2147483629ull);
}

TEST_CASE("phi examples") {
    CHECK(phi(1) == 1);
    CHECK(phi(12) == 4);
    CHECK(phi(5186) == 2592);
    CHECK(phi(5187) == 2592);
    CHECK(phi(5188) == 2592);
}

TEST_CASE("sigma examples") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(6) == 12);
    CHECK(sigma(28) == 56);
    CHECK(sigma(14) == 24);
    CHECK(sigma(15) == 24);
    CHECK(sigma(u64{1} << 62) == (u128{1} << 63) - 1);
}

TEST_CASE("rad examples") {
    CHECK(rad(1) == 1);
    CHECK(rad(12) == 6);
    CHECK(rad(1800) == 30);
}

TEST_CASE("phi, sigma, rad match brute force on an initial range") {
    for (u64 n = 1; n <= 5000; ++n) {
        CAPTURE(n);
        REQUIRE(phi(n) == oracles::phi_brute(n));
        REQUIRE(sigma(n) == oracles::sigma_brute(n));
        REQUIRE(rad(n) == oracles::rad_brute(n));
    }
}

TEST_CASE("multiplicativity on random coprime pairs") {
    SplitMix64 rng(0xc0917731);
    int done = 0;
    while (done < 1000) {
        u64 a = rng.in_range(2, 1u << 30);
        u64 b = rng.in_range(2, 1u << 30);
        if (std::gcd(a, b) != 1) continue;
        ++done;
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(phi(a * b) == phi(a) * phi(b));
        REQUIRE(sigma(a * b) == sigma(a) * sigma(b));
        REQUIRE(rad(a * b) == rad(a) * rad(b));
    }
}

TEST_CASE("abundancy is reduced and equals one only at n = 1") {
    CHECK(abundancy(1) == AbundancyIndex{1, 1});
    CHECK(abundancy(6) == AbundancyIndex{2, 1});
    CHECK(abundancy(28) == AbundancyIndex{2, 1});
    CHECK(abundancy(14) == AbundancyIndex{12, 7});
    CHECK(abundancy(14).str() == "12/7");
    for (u64 n = 1; n <= 10000; ++n) {
        auto ab = abundancy(n);
        CAPTURE(n);
        REQUIRE(gcd128(ab.num, ab.den) == 1);
        REQUIRE(ab.num >= ab.den);
        REQUIRE((ab.num == ab.den) == (n == 1));
    }
}

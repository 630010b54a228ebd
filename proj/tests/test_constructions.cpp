#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "kappalab/constructions.hpp"
#include "kappalab/kappa.hpp"
#include "kappalab/rng.hpp"
#include "oracles.hpp"

using namespace kappalab;

TEST_CASE("sierpinski solutions for small k") {
    auto r1 = sierpinski_solution(1);
    CHECK(r1.n == 1);  // p = 2
    CHECK(r1.k == 1);
    CHECK(r1.verified);
    CHECK(phi(1) == phi(2));

    auto r3 = sierpinski_solution(3);
    CHECK(r3.n == 3);  // p = 2 again
    CHECK(phi(3) == phi(6));

    auto r4 = sierpinski_solution(4);
    CHECK(r4.n == 8);  // p = 3
    CHECK(phi(8) == phi(12));

    CHECK(sierpinski_solution(6).n == 24);  // p = 5
    CHECK(phi(24) == phi(30));
    CHECK_THROWS_AS(sierpinski_solution(0), ConstructionError);
}

TEST_CASE("sierpinski randomized verification") {
    SplitMix64 rng(0x51e7b001);
    for (int i = 0; i < 500; ++i) {
        u64 k = rng.in_range(1, 1'000'000'000);
        auto rec = sierpinski_solution(k);
        CAPTURE(k);
        REQUIRE(rec.verified);
        REQUIRE(rec.k == k);
        REQUIRE(phi(rec.n) == phi(rec.n + k));
    }
}

TEST_CASE("schinzel identity and gates") {
    auto rec = schinzel_solution(2, 2);  // 3 and 5 prime, both > 2
    CHECK(rec.n == 10);
    CHECK(rec.k == 2);
    CHECK(phi(10) == 4);
    CHECK(phi(12) == 4);

    auto rec6 = schinzel_solution(6, 6);  // 7 and 13 prime, both > 6
    CHECK(rec6.n == 78);
    CHECK(phi(78) == 24);
    CHECK(phi(84) == 24);

    // r+1 = 2 equals k: the "larger than k" hypothesis fails.
    CHECK_THROWS_AS(schinzel_solution(2, 1), ConstructionError);
    // Odd k has no Schinzel form.
    CHECK_THROWS_AS(schinzel_solution(3, 2), ConstructionError);
    // 2r+1 composite.
    CHECK_THROWS_AS(schinzel_solution(2, 4), ConstructionError);
}

TEST_CASE("ghp construction and its gates") {
    auto rec = ghp_solution(2, 2, 2);  // primes 3 and 5
    CHECK(rec.n == 10);
    CHECK(rec.k == 2);
    CHECK(rec.prov.str() == "ghp(j=2,r=2)");

    // rad(1) = 1 != rad(2): no valid j exists for odd k.
    CHECK_THROWS_AS(ghp_solution(1, 1, 1), ConstructionError);

    // j = 2, k = 2, r = 1 assembles primes 2 and 3, but 2 | j; without the
    // coprimality gate the identity would be wrong: phi(6) != phi(8).
    CHECK_THROWS_AS(ghp_solution(2, 2, 1), ConstructionError);
    CHECK(phi(6) != phi(8));
}

TEST_CASE("ghp complement identity on generated instances") {
    SplitMix64 rng(0x64b90002);
    int accepted = 0;
    while (accepted < 300) {
        // Family with rad(j) = rad(j+k): j = m 2^x, j+k = m 2^y, m odd.
        u64 m = 2 * rng.in_range(0, 200) + 1;
        u64 x = rng.in_range(1, 5);
        u64 y = x + rng.in_range(1, 3);
        u64 j = m << x;
        u64 k = (m << y) - j;
        u64 r = rng.in_range(1, 2000);
        try {
            auto rec = ghp_solution(j, k, r);
            ++accepted;
            u64 g = std::gcd(j, j + k);
            REQUIRE(rec.n + k == (j + k) * (j / g * r + 1));
            REQUIRE(phi(rec.n) == phi(rec.n + k));
        } catch (const ConstructionError&) {
        }
    }
}

TEST_CASE("ps construction reproduces the worked pairs") {
    auto rec = ps_solution(1, 2, 6, 1);
    CHECK(rec.m1 == 28);
    CHECK(rec.m2 == 26);
    CHECK(rec.record.n == 26);
    CHECK(rec.record.k == 2);
    CHECK(phi(26) == 12);
    CHECK(phi(28) == 12);

    auto scaled = ps_solution(1, 2, 6, 5);
    CHECK(scaled.m1 == 140);
    CHECK(scaled.m2 == 130);
    CHECK(scaled.record.k == 10);
    CHECK(phi(130) == 48);

    // kappa scaling invariance carries through the construction.
    auto reduced = ps_solution(2, 4, 6, 1);
    CHECK(reduced.m1 == rec.m1);
    CHECK(reduced.m2 == rec.m2);

    CHECK_THROWS_AS(ps_solution(2, 1, 6, 1), ConstructionError);
    CHECK_THROWS_AS(ps_solution(1, 2, 1, 1), ConstructionError);  // r <= max(a',b')
    CHECK_THROWS_AS(ps_solution(1, 2, 4, 1), ConstructionError);  // 4*2+1 = 9 composite
}

TEST_CASE("ps difference identity on generated instances") {
    SplitMix64 rng(0x95000003);
    int accepted = 0;
    while (accepted < 300) {
        u64 a = rng.in_range(1, 60);
        u64 b = rng.in_range(1, 60);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        u64 r = rng.in_range(b + 1, 5000);
        u64 ell = rng.in_range(1, 50);
        try {
            auto res = ps_solution(a, b, r, ell);
            ++accepted;
            REQUIRE(static_cast<u128>(res.m1) - res.m2 ==
                    static_cast<u128>(ell) * kappa(a, b));
            REQUIRE(phi(res.m1) == phi(res.m2));
        } catch (const ConstructionError&) {
        }
    }
}

TEST_CASE("mtup tuples share one phi value") {
    auto res = mtup_solution({1, 2}, 2, 1);
    CHECK(res.offsets == std::vector<u64>{4, 2});
    CHECK(res.n == 8);
    CHECK(res.common_phi == 4);
    REQUIRE(res.records.size() == 1);
    CHECK(res.records[0].n == 10);
    CHECK(res.records[0].k == 2);

    // r = 2 gives primes 3,5,7 but 3 divides (1*2*3)^2 = 36; the gate that
    // makes Theorem-style tuples sound must reject it.
    CHECK_THROWS_AS(mtup_solution({1, 2, 3}, 2, 1), ConstructionError);

    // r = 6 gives primes 7, 13, 19, all coprime to 36.
    auto res3 = mtup_solution({1, 2, 3}, 6, 1);
    CHECK(res3.offsets == std::vector<u64>{36, 18, 12});
    CHECK(res3.n == 216);
    CHECK(res3.common_phi == 72);
    CHECK(phi(252) == 72);
    CHECK(phi(234) == 72);
    CHECK(phi(228) == 72);

    CHECK_THROWS_AS(mtup_solution({1, 1}, 2, 1), ConstructionError);
    CHECK_THROWS_AS(mtup_solution({1}, 2, 1), ConstructionError);
}

TEST_CASE("mtup randomized verification") {
    SplitMix64 rng(0x307b9004);
    int accepted = 0;
    while (accepted < 200) {
        std::size_t m = 2 + rng.below(3);
        auto a_list = rng.distinct_in_range(1, 25, m);
        u64 r = rng.in_range(1, 20000);
        u64 ell = rng.in_range(1, 30);
        try {
            auto res = mtup_solution(a_list, r, ell);
            ++accepted;
            for (std::size_t i = 0; i < a_list.size(); ++i) {
                REQUIRE(phi(res.n + ell * res.offsets[i]) == res.common_phi);
            }
        } catch (const ConstructionError&) {
        }
    }
}

TEST_CASE("sigma construction on the perfect pair") {
    // A = lcm(6,28) = 84, forms 14r-1 and 3r-1; the first good r past 84 is 88.
    auto witnesses = find_prime_pair(14, 3, -1, 85, 1000);
    REQUIRE_FALSE(witnesses.empty());
    CHECK(witnesses.front().r == 88);

    auto res = sigma_solution({6, 28}, 88, 1);
    CHECK(res.values == std::vector<u64>{7364, 7386});
    CHECK(res.common_sigma == 2 * 84 * 88);
    REQUIRE(res.records.size() == 1);
    CHECK(res.records[0].n == 7364);
    CHECK(res.records[0].k == 22);
    CHECK(res.records[0].func == Func::Sigma);

    auto scaled = sigma_solution({6, 28}, 88, 5);
    CHECK(scaled.records[0].k == 110);
    CHECK(scaled.common_sigma == 2 * sigma(5) * 84 * 88);

    CHECK_THROWS_AS(sigma_solution({6, 10}, 88, 1), ConstructionError);  // 2 vs 9/5
    CHECK_THROWS_AS(sigma_solution({6, 28}, 10, 1), ConstructionError);  // r <= A
    CHECK_THROWS_AS(sigma_solution({6, 28}, 88, 14), ConstructionError); // (ell, A) > 1
}

TEST_CASE("sigma value identity on generated instances") {
    SplitMix64 rng(0x5196a005);
    const std::vector<std::vector<u64>> pools = {
        {6, 28}, {28, 496}, {6, 496}, {6, 28, 496}, {6, 28, 496, 8128}};
    int accepted = 0;
    while (accepted < 150) {
        const auto& a_list = pools[rng.below(pools.size())];
        u64 r = rng.in_range(1, 300000);
        u64 ell = rng.in_range(1, 60);
        try {
            auto res = sigma_solution(a_list, r, ell);
            ++accepted;
            u64 A = 1;
            for (u64 a : a_list) A = std::lcm(A, a);
            REQUIRE(checked_mul(res.common_sigma, res.index.den) ==
                    checked_mul(checked_mul(checked_mul(res.index.num, sigma(ell)), A), r));
            for (std::size_t i = 0; i + 1 < res.values.size(); ++i) {
                REQUIRE(sigma(res.values[i]) == sigma(res.values[i + 1]));
            }
        } catch (const ConstructionError&) {
        }
    }
}

TEST_CASE("yamada gates reject without the consecutive-friends hypothesis") {
    // No m <= 10^7 satisfies abundancy(m) = abundancy(m+1); every small m
    // must fall at the first gate.
    CHECK_THROWS_AS(yamada_sigma_pair(2, 10), ConstructionError);
    CHECK_THROWS_AS(yamada_sigma_pair(14, 100), ConstructionError);  // sigma equal, abundancy not
    CHECK_THROWS_AS(yamada_sigma_pair(1, 10), ConstructionError);
    for (u64 m = 1; m <= 2000; ++m) {
        CHECK_THROWS_AS(yamada_sigma_pair(m, 3 * m + 5), ConstructionError);
    }
}

TEST_CASE("prime pair scans") {
    auto ws = find_prime_pair(1, 2, 1, 1, 10);
    REQUIRE(ws.size() == 3);
    CHECK(ws[0].r == 1);
    CHECK(ws[1].r == 2);
    CHECK(ws[2].r == 6);

    CHECK(find_prime_pair(1, 2, 1, 1, 0).empty());
    CHECK_FALSE(find_prime_pair(14, 3, -1, 85, 1000).empty());
    CHECK_THROWS_AS(find_prime_pair(2, 2, 1, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(find_prime_pair(1, 2, 3, 1, 10), std::invalid_argument);
}

TEST_CASE("provenance strings round out the record surface") {
    CHECK(sierpinski_solution(4).prov.str() == "sierpinski");
    CHECK(schinzel_solution(2, 2).prov.str() == "schinzel(r=2)");
    CHECK(ps_solution(1, 2, 6, 1).record.prov.str() == "ps(a=1,b=2,r=6,l=1)");
    CHECK(mtup_solution({1, 2}, 2, 1).records[0].prov.str() == "mtup(a=1:2,r=2,l=1)");
    CHECK(sigma_solution({6, 28}, 88, 1).records[0].prov.str() ==
          "sigma_friends(a=6:28,r=88,l=1)");
    CHECK(func_name(Func::Phi) == std::string("phi"));
    CHECK(func_name(Func::Sigma) == std::string("sigma"));
}

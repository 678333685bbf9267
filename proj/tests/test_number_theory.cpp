#include <gtest/gtest.h>

#include <cmath>

#include "permlcs/number_theory.hpp"

using namespace permlcs;

namespace {

bool prime_by_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

TEST(Primes, MatchesTrialDivision) {
    for (std::uint64_t n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), prime_by_trial_division(n)) << n;
}

TEST(Primes, LargeKnownValues) {
    EXPECT_TRUE(is_prime(18446744073709551557ull));      // largest 64-bit prime
    EXPECT_FALSE(is_prime(18446744073709551615ull));
    EXPECT_FALSE(is_prime(3215031751ull));                // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(3825123056546413051ull));       // strong pseudoprime to the first 9 prime bases
    EXPECT_TRUE(is_prime(1000000007ull));
    EXPECT_FALSE(is_prime(1000000007ull * 998244353ull));
}

TEST(Primes, NextPrimeAbove) {
    EXPECT_EQ(next_prime_above(12), 13u);
    EXPECT_EQ(next_prime_above(24), 29u);
    EXPECT_EQ(next_prime_above(13), 17u);
    EXPECT_EQ(next_prime_above(0), 2u);
}

TEST(Roots, CeilRoot) {
    EXPECT_EQ(ceil_cbrt(1), 1u);
    EXPECT_EQ(ceil_cbrt(8), 2u);
    EXPECT_EQ(ceil_cbrt(9), 3u);
    EXPECT_EQ(ceil_cbrt(16), 3u);
    EXPECT_EQ(ceil_cbrt(72), 5u);
    EXPECT_EQ(ceil_cbrt(1000000), 100u);
    EXPECT_EQ(ceil_cbrt(1000001), 101u);
    EXPECT_EQ(ceil_sqrt(100), 10u);
    EXPECT_EQ(ceil_sqrt(1024), 32u);
    EXPECT_EQ(ceil_sqrt(10000), 100u);
    EXPECT_EQ(ceil_sqrt(10001), 101u);
    EXPECT_EQ(ceil_root(27, 3), 3u);
    EXPECT_EQ(ceil_root(28, 3), 4u);
    for (std::uint64_t n = 1; n < 5000; ++n) {
        for (unsigned r = 1; r <= 7; ++r) {
            const auto s = ceil_root(n, r);
            EXPECT_GE(ipow_sat(s, r), n);
            EXPECT_LT(ipow_sat(s - 1, r), n);
        }
    }
}

TEST(Bounds, CubeRootBoundIsExact) {
    // 16 * (72*3)^{1/3} = 96 exactly.
    EXPECT_TRUE(within_cube_root_bound(96, 16, 72, 3));
    EXPECT_FALSE(within_cube_root_bound(97, 16, 72, 3));
    EXPECT_DOUBLE_EQ(cube_root_bound_value(16.0, 72, 3), 96.0);
    // 32 * (300*2)^{1/3} = 269.89... ; 269 inside, 270 outside.
    EXPECT_TRUE(within_cube_root_bound(269, 32, 300, 2));
    EXPECT_FALSE(within_cube_root_bound(270, 32, 300, 2));
}

TEST(Bounds, TwoESqrt) {
    EXPECT_NEAR(two_e_sqrt(10000), 543.6563656918, 1e-9);
    EXPECT_NEAR(two_e_sqrt(400), 108.7312731384, 1e-9);
    EXPECT_FALSE(reaches_two_e_sqrt(543, 10000));
    EXPECT_TRUE(reaches_two_e_sqrt(544, 10000));
    EXPECT_FALSE(reaches_two_e_sqrt(5, 1));
    EXPECT_TRUE(reaches_two_e_sqrt(6, 1));
}

} // namespace

#pragma once

/**
 * @file number_theory.hpp
 * @brief Deterministic 64-bit primality, integer roots, and exact bound predicates.
 */

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace permlcs {

using u128 = unsigned __int128;

namespace detail {
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}
} // namespace detail

/// Miller-Rabin with a witness set that is exact for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    const int shift = std::countr_zero(n - 1);
    const std::uint64_t d = (n - 1) >> shift;
    constexpr std::array<std::uint64_t, 7> witnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (std::uint64_t a : witnesses) {
        a %= n;
        if (a == 0) continue;
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < shift; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Smallest prime strictly greater than `after`.
inline std::uint64_t next_prime_above(std::uint64_t after) {
    for (std::uint64_t c = after + 1; c > after; ++c)
        if (is_prime(c)) return c;
    throw std::overflow_error("next_prime_above: no 64-bit prime above input");
}

/// base^exp, saturating at UINT64_MAX.
inline std::uint64_t ipow_sat(std::uint64_t base, unsigned exp) {
    u128 result = 1;
    constexpr u128 cap = std::numeric_limits<std::uint64_t>::max();
    for (unsigned e = 0; e < exp; ++e) {
        result *= base;
        if (result > cap) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

/// Smallest s >= 0 with s^r >= n.
inline std::uint64_t ceil_root(std::uint64_t n, unsigned r) {
    if (r == 0) throw std::invalid_argument("ceil_root: zero-th root");
    if (n <= 1 || r == 1) return n;
    auto s = static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<long double>(n), 1.0L / r)));
    while (s > 0 && ipow_sat(s - 1, r) >= n) --s;
    while (ipow_sat(s, r) < n) ++s;
    return s;
}

inline std::uint64_t ceil_cbrt(std::uint64_t n) { return ceil_root(n, 3); }
inline std::uint64_t ceil_sqrt(std::uint64_t n) { return ceil_root(n, 2); }

/// Exact test of length <= coeff * (n*k)^(1/3), i.e. length^3 <= coeff^3 * n * k.
inline bool within_cube_root_bound(std::uint64_t length, std::uint64_t coeff, std::uint64_t n, std::uint64_t k) {
    const u128 lhs = static_cast<u128>(length) * length * length;
    const u128 rhs = static_cast<u128>(coeff) * coeff * coeff * n * k;
    return lhs <= rhs;
}

inline double cube_root_bound_value(double coeff, std::uint64_t n, std::uint64_t k) {
    return coeff * std::cbrt(static_cast<double>(n) * static_cast<double>(k));
}

inline double two_e_sqrt(std::uint64_t n) {
    return 2.0 * std::numbers::e * std::sqrt(static_cast<double>(n));
}

/// length >= 2e*sqrt(n), with the threshold nudged up one ulp so rounding never manufactures a violation.
inline bool reaches_two_e_sqrt(std::uint64_t length, std::uint64_t n) {
    const double threshold = std::nextafter(two_e_sqrt(n), std::numeric_limits<double>::infinity());
    return static_cast<double>(length) >= threshold;
}

} // namespace permlcs

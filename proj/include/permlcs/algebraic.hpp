#pragma once

/**
 * @file algebraic.hpp
 * @brief k permutations on [n] with pairwise LCS O((nk)^{1/3}), from a 3-D lattice and quadratic forms mod p.
 *
 * Exact case n = k^2 * s1^3: the lattice [s1] x [s2] x [s3] with s2 = s3 = s1*k
 * is enumerated by a = x + s1*(y-1) + s1*s2*(z-1). Permutation j lists [n]
 * sorted by the key (h3, h2, h1), most significant first, where
 *
 *     h3 = j^2 x + 2 j y + 2 z  (mod p),   h2 = j x + y,   h1 = x,
 *
 * and p is the smallest prime above 4*s3. Any two of the permutations share
 * no common subsequence longer than 2p - 1.
 *
 * Other n are rounded up to n' = k^2 * ceil((n/k^2)^{1/3})^3 <= 8n and the
 * resulting permutations are restricted back to [n].
 */

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "permlcs/number_theory.hpp"
#include "permlcs/parallel.hpp"
#include "permlcs/permutation.hpp"

namespace permlcs {

struct ConstructionParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t s1 = 0;
    std::uint64_t s2 = 0;
    std::uint64_t s3 = 0;
    std::uint64_t p = 0;

    bool operator==(const ConstructionParams&) const = default;
};

struct LatticePoint {
    std::int64_t x = 1;
    std::int64_t y = 1;
    std::int64_t z = 1;

    bool operator==(const LatticePoint&) const = default;
};

struct HTriple {
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;
    std::int64_t h3 = 0;

    bool operator==(const HTriple&) const = default;

    /// Ordering used for permutation j: h3 most significant, h1 least.
    auto key() const noexcept { return std::tuple(h3, h2, h1); }
};

inline constexpr std::uint64_t kMaxNK = std::uint64_t{1} << 60;

inline ConstructionParams params_from(std::uint64_t n, std::uint64_t k) {
    if (k < 3) throw std::invalid_argument("params_from: k must be at least 3, got " + std::to_string(k));
    if (n == 0 || static_cast<u128>(k) * k > n)
        throw std::invalid_argument("params_from: need k <= sqrt(n), got n = " + std::to_string(n) +
                                    ", k = " + std::to_string(k));
    if (static_cast<u128>(n) * k >= kMaxNK)
        throw std::invalid_argument("params_from: n*k must stay below 2^60");
    const std::uint64_t ratio = n / (k * k);
    const std::uint64_t s1 = ceil_cbrt(ratio);
    if (n % (k * k) != 0 || ipow_sat(s1, 3) != ratio)
        throw std::invalid_argument("params_from: n = " + std::to_string(n) +
                                    " is not of the form k^2 * s1^3; use build_general");
    ConstructionParams params{n, k, s1, s1 * k, s1 * k, 0};
    params.p = next_prime_above(4 * params.s3);
    // Bertrand: the prime lies below 8 * s3 = 8 * (nk)^{1/3}.
    if (!(params.p < 8 * params.s3))
        throw std::logic_error("params_from: prime " + std::to_string(params.p) + " not below 8(nk)^{1/3}");
    return params;
}

/// Parameters of the exact instance n' = k^2 * s1'^3 >= n used for arbitrary n >= k^2.
inline ConstructionParams general_params(std::uint64_t n, std::uint64_t k) {
    if (k < 3) throw std::invalid_argument("build_general: k must be at least 3, got " + std::to_string(k));
    if (static_cast<u128>(k) * k > n)
        throw std::invalid_argument("build_general: need n >= k^2, got n = " + std::to_string(n) +
                                    ", k = " + std::to_string(k));
    // smallest s1 with s1^3 >= n / k^2, and s1^3 is an integer
    const std::uint64_t s1 = ceil_cbrt((n + k * k - 1) / (k * k));
    const u128 n_prime = static_cast<u128>(s1) * s1 * s1 * k * k;
    if (n_prime * k >= kMaxNK) throw std::invalid_argument("build_general: n'*k must stay below 2^60");
    return params_from(static_cast<std::uint64_t>(n_prime), k);
}

inline bool in_lattice(const LatticePoint& pt, const ConstructionParams& params) {
    return pt.x >= 1 && pt.y >= 1 && pt.z >= 1 && static_cast<std::uint64_t>(pt.x) <= params.s1 &&
           static_cast<std::uint64_t>(pt.y) <= params.s2 && static_cast<std::uint64_t>(pt.z) <= params.s3;
}

inline std::uint64_t phi_inv(const LatticePoint& pt, const ConstructionParams& params) {
    if (!in_lattice(pt, params))
        throw std::out_of_range("phi_inv: lattice point (" + std::to_string(pt.x) + "," + std::to_string(pt.y) +
                                "," + std::to_string(pt.z) + ") out of range");
    const auto s1 = static_cast<std::int64_t>(params.s1);
    const auto s2 = static_cast<std::int64_t>(params.s2);
    return static_cast<std::uint64_t>(pt.x + s1 * (pt.y - 1) + s1 * s2 * (pt.z - 1));
}

/// Mixed-radix decomposition of a - 1 with x least significant.
inline LatticePoint phi(std::uint64_t a, const ConstructionParams& params) {
    if (a < 1 || a > params.n)
        throw std::out_of_range("phi: " + std::to_string(a) + " outside [1, " + std::to_string(params.n) + "]");
    const std::uint64_t r = a - 1;
    return LatticePoint{static_cast<std::int64_t>(r % params.s1 + 1),
                        static_cast<std::int64_t>(r / params.s1 % params.s2 + 1),
                        static_cast<std::int64_t>(r / (params.s1 * params.s2) + 1)};
}

inline HTriple h_eval(std::uint64_t j, const LatticePoint& pt, const ConstructionParams& params) {
    if (j < 1 || j > params.k)
        throw std::out_of_range("h_eval: j = " + std::to_string(j) + " outside [1, " + std::to_string(params.k) + "]");
    if (!in_lattice(pt, params)) throw std::out_of_range("h_eval: lattice point out of range");
    const auto jj = static_cast<std::int64_t>(j);
    const auto p = static_cast<std::int64_t>(params.p);
    // Worst case before reduction is k^2*s1 + 2k*s2 + 2*s3, far inside 64 bits under the n*k < 2^60 guard.
    const std::int64_t raw3 = jj * jj * pt.x + 2 * jj * pt.y + 2 * pt.z;
    return HTriple{pt.x, jj * pt.x + pt.y, raw3 % p};
}

namespace detail {
inline std::vector<index_t> algebraic_order(std::uint64_t j, const ConstructionParams& params) {
    using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
    const std::int64_t h2_max = static_cast<std::int64_t>(params.k * params.s1 + params.s2);
    std::vector<std::pair<Key, index_t>> keyed;
    keyed.reserve(params.n);
    for (std::uint64_t a = 1; a <= params.n; ++a) {
        const HTriple h = h_eval(j, phi(a, params), params);
        if (h.h2 <= 0 || h.h2 > h2_max) throw std::logic_error("algebraic construction: h2 outside (0, k*s1 + s2]");
        keyed.emplace_back(h.key(), static_cast<index_t>(a - 1));
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t t = 1; t < keyed.size(); ++t)
        if (keyed[t - 1].first == keyed[t].first)
            throw std::logic_error("algebraic construction: duplicate (h3, h2, h1) key for j = " + std::to_string(j));
    std::vector<index_t> images;
    images.reserve(keyed.size());
    for (const auto& entry : keyed) images.push_back(entry.second);
    return images;
}

inline PermSet algebraic_set(const ConstructionParams& params, std::uint64_t restrict_to) {
    std::vector<Permutation> perms(params.k);
    parallel_for(params.k, [&](std::size_t idx) {
        auto perm = Permutation::from_zero_based(algebraic_order(idx + 1, params));
        perms[idx] = restrict_to == params.n ? std::move(perm) : restrict(perm, restrict_to);
    });
    Provenance prov{Construction::algebraic,
                    {{"n", static_cast<std::int64_t>(restrict_to)},
                     {"k", static_cast<std::int64_t>(params.k)},
                     {"n_prime", static_cast<std::int64_t>(params.n)},
                     {"s1", static_cast<std::int64_t>(params.s1)},
                     {"s2", static_cast<std::int64_t>(params.s2)},
                     {"s3", static_cast<std::int64_t>(params.s3)},
                     {"p", static_cast<std::int64_t>(params.p)}}};
    return PermSet(std::move(perms), std::move(prov));
}
} // namespace detail

inline PermSet build_exact(std::uint64_t n, std::uint64_t k) {
    const auto params = params_from(n, k);
    return detail::algebraic_set(params, params.n);
}

inline PermSet build_general(std::uint64_t n, std::uint64_t k) {
    const auto params = general_params(n, k);
    return detail::algebraic_set(params, n);
}

} // namespace permlcs

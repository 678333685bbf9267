#pragma once

/**
 * @file bounds.hpp
 * @brief Random baselines and lower-bound checkers for pairwise LCS of permutation sets.
 *
 * Randomness: each trial t of a run seeded with `seed` draws from its own
 * std::mt19937_64 seeded with splitmix64(seed, t). The engine's output is
 * fixed by the C++ standard and bounded draws use rejection sampling, so
 * samples are identical across platforms, thread counts and runs.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlcs/number_theory.hpp"
#include "permlcs/parallel.hpp"
#include "permlcs/permutation.hpp"
#include "permlcs/subsequence.hpp"

namespace permlcs {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Independent generator for trial `index` of a run seeded with `seed`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ull)));
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

/// Fisher-Yates shuffle of the identity.
inline Permutation random_perm(std::size_t n, Rng& rng) {
    if (n == 0) throw std::invalid_argument("random_perm: n must be positive");
    std::vector<index_t> images(n);
    for (std::size_t t = 0; t < n; ++t) images[t] = static_cast<index_t>(t);
    for (std::size_t t = n - 1; t > 0; --t) std::swap(images[t], images[uniform_below(rng, t + 1)]);
    return Permutation::from_zero_based(std::move(images));
}

inline PermSet random_set(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<Permutation> perms;
    perms.reserve(k);
    for (std::size_t i = 0; i < k; ++i) perms.push_back(random_perm(n, rng));
    return PermSet(std::move(perms), Provenance{Construction::random,
                                                {{"n", static_cast<std::int64_t>(n)},
                                                 {"k", static_cast<std::int64_t>(k)}}});
}

struct LisSample {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> lengths;
    std::vector<std::size_t> lds_lengths;
};

inline LisSample sample_lis(std::size_t n, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("sample_lis: trials must be positive");
    LisSample out{n, trials, seed, std::vector<std::size_t>(trials), std::vector<std::size_t>(trials)};
    parallel_for(trials, [&](std::size_t t) {
        Rng rng = trial_rng(seed, t);
        const Permutation p = random_perm(n, rng);
        out.lengths[t] = lis(p);
        out.lds_lengths[t] = lds(p);
    });
    return out;
}

struct ProbabilisticVerdict {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double threshold = 0.0;              // 2e * sqrt(n)
    std::vector<std::size_t> max_lcs;    // per sampled set
    std::size_t violations = 0;          // sets with max pairwise LCS >= threshold
    double fraction_below = 0.0;
    std::size_t min_max_lcs = 0;         // empirical upper estimate of f_k(n)
    std::size_t max_max_lcs = 0;
    double mean_max_lcs = 0.0;

    std::map<std::size_t, std::size_t> histogram() const {
        std::map<std::size_t, std::size_t> h;
        for (auto v : max_lcs) ++h[v];
        return h;
    }
};

/// Samples `trials` random k-sets on [n] and compares each set's max pairwise LCS with 2e*sqrt(n).
inline ProbabilisticVerdict check_probabilistic_bound(std::size_t n, std::size_t k, std::size_t trials,
                                                      std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("check_probabilistic_bound: k must be at least 2");
    if (trials == 0) throw std::invalid_argument("check_probabilistic_bound: trials must be positive");
    ProbabilisticVerdict v;
    v.n = n;
    v.k = k;
    v.trials = trials;
    v.seed = seed;
    v.threshold = two_e_sqrt(n);
    v.max_lcs.resize(trials);
    parallel_for(trials, [&](std::size_t t) {
        Rng rng = trial_rng(seed, t);
        const PermSet s = random_set(n, k, rng);
        std::size_t best = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) best = std::max(best, lcs_pair(s[i], s[j]));
        v.max_lcs[t] = best;
    });
    double sum = 0.0;
    v.min_max_lcs = v.max_lcs.front();
    for (auto m : v.max_lcs) {
        if (reaches_two_e_sqrt(m, n)) ++v.violations;
        v.min_max_lcs = std::min(v.min_max_lcs, m);
        v.max_max_lcs = std::max(v.max_max_lcs, m);
        sum += static_cast<double>(m);
    }
    v.mean_max_lcs = sum / static_cast<double>(trials);
    v.fraction_below = static_cast<double>(trials - v.violations) / static_cast<double>(trials);
    return v;
}

/// Largest m with m! < k and m <= n.
inline std::size_t pigeonhole_m(std::size_t k, std::size_t n) {
    std::size_t m = 0;
    std::uint64_t factorial = 1; // (m+1)! once advanced
    while (m < n) {
        const std::uint64_t next = factorial * (m + 1);
        if (next / (m + 1) != factorial || next >= k) break;
        factorial = next;
        ++m;
    }
    return m;
}

struct PigeonholePair {
    std::size_t m = 0;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// Two members inducing the same ordering on {1..m}; first such pair in index order.
inline std::optional<PigeonholePair> pigeonhole_pair(const PermSet& s) {
    if (s.k() < 2) throw std::invalid_argument("pigeonhole_pair: need at least two permutations");
    const std::size_t m = pigeonhole_m(s.k(), s.n());
    if (m == 0) return PigeonholePair{0, 0, 1};
    std::map<Permutation, std::size_t> first_seen;
    for (std::size_t j = 0; j < s.k(); ++j) {
        auto [it, inserted] = first_seen.emplace(restrict(s[j], m), j);
        if (!inserted) return PigeonholePair{m, it->second, j};
    }
    return std::nullopt;
}

inline constexpr std::size_t kPhiTableLimit = 2000;

/// phi[l] = length of the longest common subsequence of a and b starting with value l+1 (0-based storage).
inline std::vector<std::size_t> lcs_starting_with(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lcs_starting_with: ground sets differ");
    if (a.size() > kPhiTableLimit)
        throw std::invalid_argument("lcs_starting_with: n above the table limit " + std::to_string(kPhiTableLimit));
    const auto q = detail::relabel_by_position(a, b);
    const std::size_t n = q.size();
    std::vector<std::size_t> from(n, 1);
    for (std::size_t t = n; t-- > 0;)
        for (std::size_t u = t + 1; u < n; ++u)
            if (q[u] > q[t]) from[t] = std::max(from[t], from[u] + 1);
    std::vector<std::size_t> phi(n);
    auto ai = a.images();
    for (std::size_t t = 0; t < n; ++t) phi[ai[t]] = from[t];
    return phi;
}

struct LowerBoundReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t max_pair_lcs = 0;
    std::size_t cube_root_bound = 0; // ceil(n^{1/3})
    bool holds = false;
    std::size_t pigeonhole_m = 0;
    std::optional<PigeonholePair> pigeonhole;
    /// Present when requested and n fits the table limit: (phi_12, phi_13, phi_23) per value.
    std::optional<std::vector<std::array<std::size_t, 3>>> phi_table;
    /// Number of distinct phi triples; the counting argument forces it to equal n.
    std::size_t distinct_phi_triples = 0;
};

inline LowerBoundReport verify_cube_root_lower_bound(const PermSet& s, bool with_phi_table = false) {
    if (s.k() < 3) throw std::invalid_argument("verify_cube_root_lower_bound: need k >= 3");
    LowerBoundReport r;
    r.n = s.n();
    r.k = s.k();
    r.max_pair_lcs = lcs_all_pairs(s).max_pair();
    r.cube_root_bound = static_cast<std::size_t>(ceil_cbrt(r.n));
    r.holds = r.max_pair_lcs >= r.cube_root_bound;
    r.pigeonhole_m = pigeonhole_m(r.k, r.n);
    r.pigeonhole = pigeonhole_pair(s);
    if (with_phi_table && r.n <= kPhiTableLimit) {
        const auto p12 = lcs_starting_with(s[0], s[1]);
        const auto p13 = lcs_starting_with(s[0], s[2]);
        const auto p23 = lcs_starting_with(s[1], s[2]);
        std::vector<std::array<std::size_t, 3>> table(r.n);
        for (std::size_t l = 0; l < r.n; ++l) table[l] = {p12[l], p13[l], p23[l]};
        std::vector<std::array<std::size_t, 3>> sorted = table;
        std::sort(sorted.begin(), sorted.end());
        r.distinct_phi_triples = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
        r.phi_table = std::move(table);
    }
    return r;
}

} // namespace permlcs

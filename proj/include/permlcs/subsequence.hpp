#pragma once

/**
 * @file subsequence.hpp
 * @brief Exact LIS/LDS and pairwise LCS of permutations.
 *
 * lcs_pair reduces to LIS: relabel every value of a by its position in b;
 * a common subsequence of a and b is exactly an increasing subsequence of
 * the relabeled sequence. lcs_pair_dp is the textbook quadratic table and
 * exists as an independent check of that reduction.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <ranges>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlcs/parallel.hpp"
#include "permlcs/permutation.hpp"

namespace permlcs {

/// Patience sorting with binary search over pile tops. Elements must be
/// distinct under `less`; a tie with a pile top is reported as an error.
template <std::ranges::input_range R, class Less = std::less<>>
std::size_t lis(const R& seq, Less less = {}) {
    using T = std::ranges::range_value_t<R>;
    std::vector<T> tops;
    for (const auto& v : seq) {
        auto it = std::lower_bound(tops.begin(), tops.end(), v, less);
        if (it == tops.end()) {
            tops.push_back(v);
        } else {
            if (!less(v, *it)) throw std::invalid_argument("lis: sequence has repeated values");
            *it = v;
        }
    }
    return tops.size();
}

template <std::ranges::input_range R>
std::size_t lds(const R& seq) {
    return lis(seq, std::greater<>{});
}

inline std::size_t lis(const Permutation& p) { return lis(p.images()); }
inline std::size_t lds(const Permutation& p) { return lds(p.images()); }

namespace detail {
inline void require_same_n(const Permutation& a, const Permutation& b, const char* who) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(who) + ": permutations on different ground sets (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

/// a's one-line sequence with each value replaced by its position in b.
inline std::vector<index_t> relabel_by_position(const Permutation& a, const Permutation& b) {
    auto bi = b.images();
    std::vector<index_t> pos(bi.size());
    for (std::size_t t = 0; t < bi.size(); ++t) pos[bi[t]] = static_cast<index_t>(t);
    std::vector<index_t> out;
    out.reserve(a.size());
    for (auto v : a.images()) out.push_back(pos[v]);
    return out;
}
} // namespace detail

inline std::size_t lcs_pair(const Permutation& a, const Permutation& b) {
    detail::require_same_n(a, b, "lcs_pair");
    return lis(detail::relabel_by_position(a, b));
}

/// Largest n accepted by lcs_pair_dp unless the caller raises it.
inline constexpr std::size_t kDpDefaultLimit = 8192;

/// Quadratic DP over the one-line sequences, two rolling rows.
inline std::size_t lcs_pair_dp(const Permutation& a, const Permutation& b,
                               std::size_t limit = kDpDefaultLimit) {
    detail::require_same_n(a, b, "lcs_pair_dp");
    const std::size_t n = a.size();
    if (n > limit)
        throw std::invalid_argument("lcs_pair_dp: n = " + std::to_string(n) + " exceeds the oracle limit " +
                                    std::to_string(limit));
    auto ai = a.images();
    auto bi = b.images();
    std::vector<std::uint32_t> prev(n + 1, 0), cur(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            cur[j] = ai[i - 1] == bi[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

/// Symmetric k x k matrix of pairwise LCS lengths; the diagonal holds n.
class LcsMatrix {
public:
    LcsMatrix(std::size_t k, std::size_t n) : k_(k), n_(n), entries_(k * k, 0) {
        for (std::size_t i = 0; i < k; ++i) entries_[i * k + i] = n;
    }

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t operator()(std::size_t i, std::size_t j) const { return entries_.at(i * k_ + j); }

    void set(std::size_t i, std::size_t j, std::size_t v) {
        entries_.at(i * k_ + j) = v;
        entries_.at(j * k_ + i) = v;
    }

    /// Length of the longest common subsequence of the set: max over i < j.
    std::size_t max_pair() const { return extreme(std::greater<>{}).value; }
    std::size_t min_pair() const { return extreme(std::less<>{}).value; }

    struct PairValue {
        std::size_t i = 0, j = 1, value = 0;
    };
    PairValue argmax_pair() const { return extreme(std::greater<>{}); }

    /// Upper-triangle entries in row-major order (i < j).
    std::vector<PairValue> pairs() const {
        std::vector<PairValue> out;
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j) out.push_back({i, j, (*this)(i, j)});
        return out;
    }

private:
    template <class Better>
    PairValue extreme(Better better) const {
        PairValue best{0, 1, (*this)(0, 1)};
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = i + 1; j < k_; ++j)
                if (better((*this)(i, j), best.value)) best = {i, j, (*this)(i, j)};
        return best;
    }

    std::size_t k_;
    std::size_t n_;
    std::vector<std::size_t> entries_;
};

inline LcsMatrix lcs_all_pairs(const PermSet& s) {
    if (s.k() < 2) throw std::invalid_argument("lcs_all_pairs: need at least two permutations");
    const std::size_t k = s.k();
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) jobs.emplace_back(i, j);
    std::vector<std::size_t> values(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t t) { values[t] = lcs_pair(s[jobs[t].first], s[jobs[t].second]); });
    LcsMatrix m(k, s.n());
    for (std::size_t t = 0; t < jobs.size(); ++t) m.set(jobs[t].first, jobs[t].second, values[t]);
    return m;
}

} // namespace permlcs

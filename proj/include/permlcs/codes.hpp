#pragma once

/**
 * @file codes.hpp
 * @brief Permutation sets viewed as codes under the deletion distance.
 *
 * For two permutations on the same [n], half the number of insertions plus
 * deletions turning one into the other is n - LCS. A set's minimum distance
 * is therefore n minus its largest pairwise LCS.
 */

#include <cstddef>
#include <stdexcept>

#include "permlcs/permutation.hpp"
#include "permlcs/subsequence.hpp"

namespace permlcs {

inline std::size_t d_del(const Permutation& a, const Permutation& b) {
    detail::require_same_n(a, b, "d_del");
    return a.size() - lcs_pair(a, b);
}

struct MinDistance {
    std::size_t distance = 0;
    bool duplicate_codewords = false;
};

/// Duplicate members are not an error: they give distance 0 and set the flag.
inline MinDistance min_distance(const PermSet& s) {
    if (s.k() < 2) throw std::invalid_argument("min_distance: need at least two codewords");
    const std::size_t max_lcs = lcs_all_pairs(s).max_pair();
    return {s.n() - max_lcs, max_lcs == s.n()};
}

struct CodeReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t min_distance = 0;
    std::size_t max_pair_lcs = 0;
    Construction provenance = Construction::imported;
    bool duplicate_codewords = false;
};

inline CodeReport code_report(const PermSet& s) {
    if (s.k() < 2) throw std::invalid_argument("code_report: need at least two codewords");
    const LcsMatrix m = lcs_all_pairs(s);
    CodeReport r;
    r.n = s.n();
    r.k = s.k();
    r.max_pair_lcs = m.max_pair();
    r.min_distance = r.n - r.max_pair_lcs;
    r.duplicate_codewords = r.max_pair_lcs == r.n;
    r.provenance = s.provenance().kind;
    if (r.min_distance + r.max_pair_lcs != r.n) throw std::logic_error("code_report: distance/LCS duality broken");
    return r;
}

} // namespace permlcs

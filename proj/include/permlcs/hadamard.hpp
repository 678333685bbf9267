#pragma once

/**
 * @file hadamard.hpp
 * @brief Hadamard matrices (Sylvester, Paley I) and the digit-wise identity/reversal permutation sets built from them.
 *
 * Row i of a normalized order-k matrix H picks, for each of the columns
 * 1..k-1, either the identity or the reversal on [s]. Permutation i maps
 * x in [s^{k-1}] by applying those choices digit by digit to the base-s
 * expansion of x - 1 (most significant digit first). Two rows agree on
 * exactly k/2 - 1 of those columns, which caps every pairwise LCS at
 * s^{k/2-1}.
 */

#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlcs/number_theory.hpp"
#include "permlcs/parallel.hpp"
#include "permlcs/permutation.hpp"

namespace permlcs {

/// Square +1/-1 matrix. Construction only checks the entries; use is_hadamard for the row property.
class HadamardMatrix {
public:
    HadamardMatrix() = default;

    static HadamardMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        HadamardMatrix h;
        h.order_ = rows.size();
        h.entries_.reserve(h.order_ * h.order_);
        for (const auto& row : rows) {
            if (row.size() != h.order_) throw std::invalid_argument("hadamard: matrix is not square");
            for (int v : row) {
                if (v != 1 && v != -1) throw std::invalid_argument("hadamard: entries must be +1 or -1");
                h.entries_.push_back(static_cast<std::int8_t>(v));
            }
        }
        return h;
    }

    std::size_t order() const noexcept { return order_; }
    int operator()(std::size_t i, std::size_t j) const { return entries_.at(i * order_ + j); }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < order_; ++j) entries_.at(i * order_ + j) *= -1;
    }
    void negate_column(std::size_t j) {
        for (std::size_t i = 0; i < order_; ++i) entries_.at(i * order_ + j) *= -1;
    }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j) out[i][j] = (*this)(i, j);
        return out;
    }

    bool operator==(const HadamardMatrix&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<std::int8_t> entries_;
};

inline std::size_t row_differences(const HadamardMatrix& h, std::size_t i, std::size_t j) {
    std::size_t d = 0;
    for (std::size_t c = 0; c < h.order(); ++c) d += h(i, c) != h(j, c);
    return d;
}

/// Every two distinct rows differ in exactly order/2 entries.
inline bool is_hadamard(const HadamardMatrix& h) {
    const std::size_t k = h.order();
    if (k == 0) return false;
    if (k == 1) return true;
    if (k % 2 != 0) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (row_differences(h, i, j) != k / 2) return false;
    return true;
}

inline bool is_normalized(const HadamardMatrix& h) {
    for (std::size_t t = 0; t < h.order(); ++t)
        if (h(0, t) != 1 || h(t, 0) != 1) return false;
    return true;
}

inline HadamardMatrix normalize(HadamardMatrix h) {
    if (!is_hadamard(h)) throw std::invalid_argument("normalize: input is not a Hadamard matrix");
    for (std::size_t i = 0; i < h.order(); ++i)
        if (h(i, 0) == -1) h.negate_row(i);
    for (std::size_t j = 0; j < h.order(); ++j)
        if (h(0, j) == -1) h.negate_column(j);
    return h;
}

inline HadamardMatrix sylvester(std::size_t order) {
    if (order == 0 || (order & (order - 1)) != 0)
        throw std::invalid_argument("sylvester: order " + std::to_string(order) + " is not a power of two");
    std::vector<std::vector<int>> m{{1}};
    while (m.size() < order) {
        const std::size_t h = m.size();
        std::vector<std::vector<int>> next(2 * h, std::vector<int>(2 * h));
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j) {
                next[i][j] = next[i][j + h] = next[i + h][j] = m[i][j];
                next[i + h][j + h] = -m[i][j];
            }
        m = std::move(next);
    }
    return HadamardMatrix::from_rows(m);
}

/// Paley type I from q = order - 1, q prime with q = 3 (mod 4); returned normalized.
inline HadamardMatrix paley(std::size_t order) {
    if (order < 4 || !is_prime(order - 1) || (order - 1) % 4 != 3)
        throw std::invalid_argument("paley: order " + std::to_string(order) +
                                    " is not q + 1 for a prime q = 3 (mod 4)");
    const std::size_t q = order - 1;
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (std::size_t x = 1; x < q; ++x) chi[x * x % q] = 1;

    // H = I + S with S = [[0, 1^T], [-1, Q]], Q[a][b] = chi(a - b).
    std::vector<std::vector<int>> m(order, std::vector<int>(order));
    for (std::size_t j = 1; j < order; ++j) {
        m[0][j] = 1;
        m[j][0] = -1;
    }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) m[a + 1][b + 1] = chi[(a + q - b) % q];
    for (std::size_t d = 0; d < order; ++d) m[d][d] += 1;
    return normalize(HadamardMatrix::from_rows(m));
}

inline bool hadamard_order_supported(std::size_t order) {
    if (order >= 1 && (order & (order - 1)) == 0) return true;
    return order >= 4 && is_prime(order - 1) && (order - 1) % 4 == 3;
}

/// Normalized matrix of the requested order: Sylvester for powers of two, else Paley I.
inline HadamardMatrix hadamard_of_order(std::size_t order) {
    if (order >= 1 && (order & (order - 1)) == 0) return sylvester(order);
    if (hadamard_order_supported(order)) return paley(order);
    throw std::invalid_argument("no supported Hadamard construction for order " + std::to_string(order) +
                                " (need a power of two, or q + 1 with q prime = 3 mod 4)");
}

/// Columns among 1..k-1 on which rows i and j agree.
inline std::set<std::size_t> agreement_columns(const HadamardMatrix& h, std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("agreement_columns: rows must differ");
    if (i >= h.order() || j >= h.order()) throw std::out_of_range("agreement_columns: row index out of range");
    std::set<std::size_t> cols;
    for (std::size_t c = 1; c < h.order(); ++c)
        if (h(i, c) == h(j, c)) cols.insert(c);
    return cols;
}

/// Base-s digits of x - 1, most significant first, each presented in [1, s].
struct DigitVector {
    std::uint64_t base = 0;
    std::vector<std::uint64_t> digits;

    bool operator==(const DigitVector&) const = default;
};

inline DigitVector to_digits(std::uint64_t x, std::uint64_t base, std::size_t width) {
    if (base == 0) throw std::invalid_argument("to_digits: base must be positive");
    if (x == 0 || x > ipow_sat(base, static_cast<unsigned>(width)))
        throw std::out_of_range("to_digits: value outside [1, base^width]");
    DigitVector d{base, std::vector<std::uint64_t>(width)};
    std::uint64_t r = x - 1;
    for (std::size_t t = width; t-- > 0;) {
        d.digits[t] = r % base + 1;
        r /= base;
    }
    return d;
}

inline std::uint64_t from_digits(const DigitVector& d) {
    std::uint64_t r = 0;
    for (auto digit : d.digits) {
        if (digit < 1 || digit > d.base) throw std::out_of_range("from_digits: digit outside [1, base]");
        r = r * d.base + (digit - 1);
    }
    return r + 1;
}

inline constexpr std::uint64_t kDefaultMaxSize = std::uint64_t{1} << 24;

/// Ground-set size s^{k-1}; throws if it exceeds max_size.
inline std::uint64_t hadamard_ground_size(std::uint64_t k, std::uint64_t s, std::uint64_t max_size = kDefaultMaxSize) {
    if (k < 2) throw std::invalid_argument("hadamard set: k must be at least 2");
    if (s < 1) throw std::invalid_argument("hadamard set: s must be positive");
    const std::uint64_t n = ipow_sat(s, static_cast<unsigned>(k - 1));
    if (n == std::numeric_limits<std::uint64_t>::max() || n > max_size)
        throw std::invalid_argument("hadamard set: s^(k-1) = " +
                                    (n == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow")
                                                                                    : std::to_string(n)) +
                                    " exceeds the size cap " + std::to_string(max_size));
    return n;
}

/// s^{k/2 - 1}, the pairwise LCS cap of the set.
inline std::uint64_t hadamard_lcs_bound(std::uint64_t k, std::uint64_t s) {
    return ipow_sat(s, static_cast<unsigned>(k / 2 - 1));
}

inline Permutation hadamard_row_permutation(const HadamardMatrix& h, std::size_t row, std::uint64_t s) {
    const std::size_t width = h.order() - 1;
    const std::uint64_t n = ipow_sat(s, static_cast<unsigned>(width));
    std::vector<bool> reversed(width);
    for (std::size_t c = 0; c < width; ++c) reversed[c] = h(row, c + 1) == -1;
    std::vector<index_t> images(n);
    std::vector<std::uint64_t> digits(width);
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t r = x;
        for (std::size_t c = width; c-- > 0;) {
            digits[c] = r % s;
            r /= s;
        }
        std::uint64_t y = 0;
        for (std::size_t c = 0; c < width; ++c) y = y * s + (reversed[c] ? s - 1 - digits[c] : digits[c]);
        images[x] = static_cast<index_t>(y);
    }
    return Permutation::from_zero_based(std::move(images));
}

inline PermSet build_hadamard_set(std::uint64_t k, std::uint64_t s, std::uint64_t max_size = kDefaultMaxSize) {
    const std::uint64_t n = hadamard_ground_size(k, s, max_size);
    const HadamardMatrix h = hadamard_of_order(k);
    std::vector<Permutation> perms(k);
    parallel_for(k, [&](std::size_t i) { perms[i] = hadamard_row_permutation(h, i, s); });
    return PermSet(std::move(perms), Provenance{Construction::hadamard,
                                                {{"k", static_cast<std::int64_t>(k)},
                                                 {"s", static_cast<std::int64_t>(s)},
                                                 {"n", static_cast<std::int64_t>(n)},
                                                 {"n_prime", static_cast<std::int64_t>(n)}}});
}

/// Hadamard set for an arbitrary n: s = ceil(n^{1/(k-1)}), then every member restricted to [n].
inline PermSet build_hadamard_for_n(std::uint64_t k, std::uint64_t n, std::uint64_t max_size = kDefaultMaxSize) {
    if (k < 2) throw std::invalid_argument("hadamard set: k must be at least 2");
    if (n == 0) throw std::invalid_argument("hadamard set: n must be positive");
    const std::uint64_t s = ceil_root(n, static_cast<unsigned>(k - 1));
    const PermSet full = build_hadamard_set(k, s, max_size);
    if (full.n() == n) return full;
    std::vector<Permutation> perms;
    perms.reserve(k);
    for (const auto& p : full) perms.push_back(restrict(p, n));
    auto prov = full.provenance();
    prov.params["n"] = static_cast<std::int64_t>(n);
    return PermSet(std::move(perms), std::move(prov));
}

} // namespace permlcs

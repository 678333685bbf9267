#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations on [n] in one-line form, and ordered sets of them.
 *
 * Storage is 0-based: images()[t] holds pi(t+1)-1. Every function that
 * takes or returns user-facing values (from_one_based, to_one_based, the
 * text formats in io.hpp) converts at the boundary.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permlcs {

using index_t = std::uint32_t;

class Permutation {
public:
    Permutation() = default;

    /// Takes ownership of a 0-based image vector; throws if it is not a bijection on [0, n).
    static Permutation from_zero_based(std::vector<index_t> images) {
        validate(images);
        return Permutation(std::move(images));
    }

    static Permutation from_one_based(std::span<const std::int64_t> values) {
        std::vector<index_t> images;
        images.reserve(values.size());
        for (auto v : values) {
            if (v < 1 || static_cast<std::uint64_t>(v) > values.size())
                throw std::invalid_argument("permutation value " + std::to_string(v) +
                                            " outside [1, " + std::to_string(values.size()) + "]");
            images.push_back(static_cast<index_t>(v - 1));
        }
        return from_zero_based(std::move(images));
    }

    static Permutation from_one_based(std::initializer_list<std::int64_t> values) {
        std::vector<std::int64_t> v(values);
        return from_one_based(std::span<const std::int64_t>(v));
    }

    std::size_t size() const noexcept { return images_.size(); }
    std::span<const index_t> images() const noexcept { return images_; }

    /// pi(t) with 1-based argument and result.
    std::int64_t operator()(std::size_t t) const { return static_cast<std::int64_t>(images_.at(t - 1)) + 1; }

    std::vector<std::int64_t> to_one_based() const {
        std::vector<std::int64_t> out;
        out.reserve(images_.size());
        for (auto v : images_) out.push_back(static_cast<std::int64_t>(v) + 1);
        return out;
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<index_t> images) : images_(std::move(images)) {}

    static void validate(const std::vector<index_t>& images) {
        if (images.empty()) throw std::invalid_argument("permutation on an empty ground set");
        if (images.size() > (std::size_t{1} << 31)) throw std::invalid_argument("permutation too large");
        std::vector<bool> seen(images.size(), false);
        for (auto v : images) {
            if (v >= images.size() || seen[v])
                throw std::invalid_argument("sequence is not a permutation of [1, " +
                                            std::to_string(images.size()) + "]");
            seen[v] = true;
        }
    }

    std::vector<index_t> images_;
};

inline Permutation identity(std::size_t n) {
    if (n == 0) throw std::invalid_argument("identity: n must be positive");
    std::vector<index_t> images(n);
    for (std::size_t t = 0; t < n; ++t) images[t] = static_cast<index_t>(t);
    return Permutation::from_zero_based(std::move(images));
}

inline Permutation reversal(std::size_t n) {
    if (n == 0) throw std::invalid_argument("reversal: n must be positive");
    std::vector<index_t> images(n);
    for (std::size_t t = 0; t < n; ++t) images[t] = static_cast<index_t>(n - 1 - t);
    return Permutation::from_zero_based(std::move(images));
}

/// (a o b)(t) = a(b(t)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: ground sets differ");
    auto ai = a.images();
    auto bi = b.images();
    std::vector<index_t> out(a.size());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = ai[bi[t]];
    return Permutation::from_zero_based(std::move(out));
}

inline Permutation invert(const Permutation& a) {
    auto ai = a.images();
    std::vector<index_t> out(a.size());
    for (std::size_t t = 0; t < out.size(); ++t) out[ai[t]] = static_cast<index_t>(t);
    return Permutation::from_zero_based(std::move(out));
}

/// Pattern of a on [m]: delete every value above m, keep the relative order of the rest.
inline Permutation restrict(const Permutation& a, std::size_t m) {
    if (m == 0 || m > a.size())
        throw std::invalid_argument("restrict: m must lie in [1, " + std::to_string(a.size()) + "]");
    std::vector<index_t> out;
    out.reserve(m);
    for (auto v : a.images())
        if (v < m) out.push_back(v);
    return Permutation::from_zero_based(std::move(out));
}

enum class Construction { algebraic, hadamard, random, imported };

inline const char* to_string(Construction c) {
    switch (c) {
    case Construction::algebraic: return "algebraic";
    case Construction::hadamard: return "hadamard";
    case Construction::random: return "random";
    case Construction::imported: return "imported";
    }
    return "unknown";
}

struct Provenance {
    Construction kind = Construction::imported;
    std::map<std::string, std::int64_t> params;

    bool operator==(const Provenance&) const = default;
};

/// k permutations on a common [n].
class PermSet {
public:
    PermSet() = default;

    PermSet(std::vector<Permutation> perms, Provenance provenance = {})
        : perms_(std::move(perms)), provenance_(std::move(provenance)) {
        if (perms_.empty()) throw std::invalid_argument("permutation set is empty");
        for (const auto& p : perms_)
            if (p.size() != perms_.front().size())
                throw std::invalid_argument("permutation set members have different ground sets");
    }

    std::size_t n() const noexcept { return perms_.empty() ? 0 : perms_.front().size(); }
    std::size_t k() const noexcept { return perms_.size(); }
    const Permutation& operator[](std::size_t i) const { return perms_.at(i); }
    std::span<const Permutation> perms() const noexcept { return perms_; }
    const Provenance& provenance() const noexcept { return provenance_; }

    auto begin() const noexcept { return perms_.begin(); }
    auto end() const noexcept { return perms_.end(); }

    /// Equality of members only; provenance is metadata.
    bool same_members(const PermSet& other) const { return perms_ == other.perms_; }

private:
    std::vector<Permutation> perms_;
    Provenance provenance_;
};

} // namespace permlcs

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "permlcs/bounds.hpp"
#include "permlcs/permutation.hpp"
#include "permlcs/subsequence.hpp"

using namespace permlcs;

namespace {

std::vector<std::int64_t> values(const Permutation& p) { return p.to_one_based(); }

TEST(Permutation, IdentityAndReversal) {
    EXPECT_EQ(values(identity(1)), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(values(identity(4)), (std::vector<std::int64_t>{1, 2, 3, 4}));
    EXPECT_EQ(lis(identity(8)), 8u);
    EXPECT_EQ(values(reversal(1)), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(values(reversal(4)), (std::vector<std::int64_t>{4, 3, 2, 1}));
    EXPECT_EQ(lis(reversal(5)), 1u);
    EXPECT_THROW(identity(0), std::invalid_argument);
    EXPECT_THROW(reversal(0), std::invalid_argument);
}

TEST(Permutation, RejectsNonBijections) {
    EXPECT_THROW(Permutation::from_one_based({1, 1, 3}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_one_based({0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_one_based({1, 2, 4}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_zero_based({}), std::invalid_argument);
    EXPECT_NO_THROW(Permutation::from_one_based({2, 3, 1}));
}

TEST(Permutation, OneBasedCall) {
    auto p = Permutation::from_one_based({2, 3, 1});
    EXPECT_EQ(p(1), 2);
    EXPECT_EQ(p(3), 1);
}

TEST(Permutation, Compose) {
    auto p = Permutation::from_one_based({3, 1, 4, 2});
    EXPECT_EQ(compose(p, identity(4)), p);
    EXPECT_EQ(compose(identity(4), p), p);
    EXPECT_EQ(compose(Permutation::from_one_based({2, 3, 1}), Permutation::from_one_based({3, 1, 2})), identity(3));
    EXPECT_THROW(compose(identity(3), identity(4)), std::invalid_argument);
}

TEST(Permutation, Invert) {
    EXPECT_EQ(invert(identity(6)), identity(6));
    EXPECT_EQ(invert(Permutation::from_one_based({2, 3, 1})), Permutation::from_one_based({3, 1, 2}));
    EXPECT_EQ(invert(reversal(7)), reversal(7));
}

TEST(Permutation, Restrict) {
    EXPECT_EQ(values(restrict(identity(8), 5)), (std::vector<std::int64_t>{1, 2, 3, 4, 5}));
    EXPECT_EQ(values(restrict(reversal(8), 3)), (std::vector<std::int64_t>{3, 2, 1}));
    EXPECT_EQ(values(restrict(Permutation::from_one_based({3, 1, 4, 2}), 2)), (std::vector<std::int64_t>{1, 2}));
    EXPECT_THROW(restrict(identity(4), 0), std::invalid_argument);
    EXPECT_THROW(restrict(identity(4), 5), std::invalid_argument);
}

TEST(Permutation, AlgebraicProperties) {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        Rng rng = trial_rng(11, trial);
        const std::size_t n = 1 + uniform_below(rng, 64);
        auto a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        EXPECT_EQ(invert(invert(a)), a);
        EXPECT_EQ(compose(a, invert(a)), identity(n));
        const std::size_t m1 = 1 + uniform_below(rng, n);
        const std::size_t m2 = 1 + uniform_below(rng, m1);
        EXPECT_EQ(restrict(restrict(a, m1), m2), restrict(a, m2));
        EXPECT_LE(lcs_pair(restrict(a, m1), restrict(b, m1)), lcs_pair(a, b));
    }
}

TEST(PermSet, RejectsMixedGroundSets) {
    EXPECT_THROW(PermSet({identity(3), identity(4)}), std::invalid_argument);
    EXPECT_THROW(PermSet(std::vector<Permutation>{}), std::invalid_argument);
    PermSet s({identity(3), reversal(3)});
    EXPECT_EQ(s.n(), 3u);
    EXPECT_EQ(s.k(), 2u);
    EXPECT_EQ(s.provenance().kind, Construction::imported);
}

} // namespace

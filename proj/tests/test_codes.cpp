#include <gtest/gtest.h>

#include "permlcs/algebraic.hpp"
#include "permlcs/bounds.hpp"
#include "permlcs/codes.hpp"
#include "permlcs/hadamard.hpp"

using namespace permlcs;

namespace {

TEST(DeletionDistance, Examples) {
    const auto p = Permutation::from_one_based({2, 1, 4, 3});
    EXPECT_EQ(d_del(p, p), 0u);
    EXPECT_EQ(d_del(identity(10), reversal(10)), 9u);
    EXPECT_EQ(d_del(p, identity(4)), 2u);
    EXPECT_THROW(d_del(identity(3), identity(4)), std::invalid_argument);
}

TEST(DeletionDistance, MetricAxioms) {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        Rng rng = trial_rng(17, trial);
        const std::size_t n = 1 + uniform_below(rng, 50);
        auto a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
        EXPECT_EQ(d_del(a, b), d_del(b, a));
        EXPECT_EQ(d_del(a, b) == 0, a == b);
        EXPECT_LE(d_del(a, c), d_del(a, b) + d_del(b, c));
    }
}

TEST(MinDistance, Sets) {
    EXPECT_EQ(min_distance(PermSet({identity(12), reversal(12)})).distance, 11u);
    const auto dup = min_distance(PermSet({identity(5), reversal(5), identity(5)}));
    EXPECT_EQ(dup.distance, 0u);
    EXPECT_TRUE(dup.duplicate_codewords);
    EXPECT_THROW(min_distance(PermSet({identity(5)})), std::invalid_argument);

    const std::uint64_t n = 200, k = 4;
    const auto d = min_distance(build_general(n, k));
    EXPECT_FALSE(d.duplicate_codewords);
    EXPECT_GE(static_cast<double>(d.distance), static_cast<double>(n) - cube_root_bound_value(32.0, n, k));
}

TEST(CodeReport, Duality) {
    const auto alg = code_report(build_exact(72, 3));
    EXPECT_EQ(alg.n, 72u);
    EXPECT_EQ(alg.max_pair_lcs, 19u);
    EXPECT_EQ(alg.min_distance, 72u - 19u);
    EXPECT_EQ(alg.provenance, Construction::algebraic);

    const auto had = code_report(build_hadamard_set(4, 2));
    EXPECT_EQ(had.n, 8u);
    EXPECT_GE(had.min_distance, 6u);
    EXPECT_EQ(had.provenance, Construction::hadamard);

    const auto p = Permutation::from_one_based({3, 1, 2});
    const auto pp = code_report(PermSet({p, p}));
    EXPECT_EQ(pp.min_distance, 0u);
    EXPECT_TRUE(pp.duplicate_codewords);

    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        Rng rng = trial_rng(18, trial);
        const auto r = code_report(random_set(1 + uniform_below(rng, 100), 2 + uniform_below(rng, 6), rng));
        EXPECT_EQ(r.min_distance + r.max_pair_lcs, r.n);
    }
}

} // namespace

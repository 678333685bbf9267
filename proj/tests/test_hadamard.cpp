#include <gtest/gtest.h>

#include "permlcs/bounds.hpp"
#include "permlcs/hadamard.hpp"
#include "permlcs/subsequence.hpp"

using namespace permlcs;

namespace {

using Rows = std::vector<std::vector<int>>;

TEST(Sylvester, SmallOrders) {
    EXPECT_EQ(sylvester(1).rows(), (Rows{{1}}));
    EXPECT_EQ(sylvester(2).rows(), (Rows{{1, 1}, {1, -1}}));
    EXPECT_EQ(sylvester(4).rows(), (Rows{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) EXPECT_EQ(row_differences(sylvester(4), i, j), 2u);
    for (std::size_t order : {1u, 2u, 4u, 8u, 16u, 32u, 64u}) {
        EXPECT_TRUE(is_hadamard(sylvester(order)));
        EXPECT_TRUE(is_normalized(sylvester(order)));
    }
    EXPECT_THROW(sylvester(0), std::invalid_argument);
    EXPECT_THROW(sylvester(12), std::invalid_argument);
}

TEST(Paley, SupportedOrders) {
    for (std::size_t order : {4u, 8u, 12u, 20u, 24u, 32u, 44u, 48u}) {
        const auto h = paley(order);
        EXPECT_EQ(h.order(), order);
        EXPECT_TRUE(is_hadamard(h)) << order;
        EXPECT_TRUE(is_normalized(h)) << order;
    }
    const auto h12 = paley(12);
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = i + 1; j < 12; ++j) EXPECT_EQ(row_differences(h12, i, j), 6u);
    EXPECT_THROW(paley(10), std::invalid_argument);
    EXPECT_THROW(paley(6), std::invalid_argument);
    EXPECT_THROW(paley(28), std::invalid_argument);
}

TEST(Normalize, FixpointAndRecovery) {
    const auto h = sylvester(8);
    EXPECT_EQ(normalize(h), h);
    auto flipped = h;
    flipped.negate_row(0);
    EXPECT_NE(flipped, h);
    EXPECT_EQ(normalize(flipped), h);

    Rng rng = trial_rng(31, 0);
    for (int trial = 0; trial < 20; ++trial) {
        auto signed_h = h;
        for (std::size_t t = 0; t < 8; ++t) {
            if (uniform_below(rng, 2)) signed_h.negate_row(t);
            if (uniform_below(rng, 2)) signed_h.negate_column(t);
        }
        const auto n = normalize(signed_h);
        EXPECT_TRUE(is_hadamard(n));
        EXPECT_TRUE(is_normalized(n));
    }
    auto broken = HadamardMatrix::from_rows({{1, 1}, {1, 1}});
    EXPECT_THROW(normalize(broken), std::invalid_argument);
    EXPECT_THROW(HadamardMatrix::from_rows({{1, 0}, {1, 1}}), std::invalid_argument);
}

TEST(AgreementColumns, SizeIsHalfOrderMinusOne) {
    const auto h4 = sylvester(4);
    EXPECT_EQ(agreement_columns(h4, 0, 1), (std::set<std::size_t>{2}));
    EXPECT_EQ(agreement_columns(h4, 2, 3).size(), 1u);
    EXPECT_THROW(agreement_columns(h4, 1, 1), std::invalid_argument);
    for (std::size_t order : {8u, 12u, 16u, 20u}) {
        const auto h = hadamard_of_order(order);
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; j < order; ++j) {
                if (i != j) {
                    EXPECT_EQ(agreement_columns(h, i, j).size(), order / 2 - 1);
                }
            }
    }
}

TEST(Digits, RoundTrip) {
    EXPECT_EQ(to_digits(1, 3, 3).digits, (std::vector<std::uint64_t>{1, 1, 1}));
    EXPECT_EQ(to_digits(27, 3, 3).digits, (std::vector<std::uint64_t>{3, 3, 3}));
    EXPECT_EQ(to_digits(6, 3, 3).digits, (std::vector<std::uint64_t>{1, 2, 3}));
    for (std::uint64_t x = 1; x <= 81; ++x) EXPECT_EQ(from_digits(to_digits(x, 3, 4)), x);
    EXPECT_THROW(to_digits(0, 3, 3), std::out_of_range);
    EXPECT_THROW(to_digits(28, 3, 3), std::out_of_range);
}

TEST(BuildHadamard, FrozenK4S2) {
    const PermSet s = build_hadamard_set(4, 2);
    ASSERT_EQ(s.n(), 8u);
    EXPECT_EQ(s[0], identity(8));
    EXPECT_EQ(s[1].to_one_based(), (std::vector<std::int64_t>{6, 5, 8, 7, 2, 1, 4, 3}));
    EXPECT_EQ(s[2].to_one_based(), (std::vector<std::int64_t>{4, 3, 2, 1, 8, 7, 6, 5}));
    EXPECT_EQ(s[3].to_one_based(), (std::vector<std::int64_t>{7, 8, 5, 6, 3, 4, 1, 2}));
    for (const auto& pv : lcs_all_pairs(s).pairs()) {
        EXPECT_EQ(pv.value, 2u);
        EXPECT_EQ(lcs_pair_dp(s[pv.i], s[pv.j]), 2u);
    }
}

TEST(BuildHadamard, PairBoundIsSToTheAgreement) {
    for (auto [k, s] : {std::pair<std::uint64_t, std::uint64_t>{4, 3}, {4, 4}, {8, 2}, {12, 2}, {8, 3}}) {
        const PermSet set = build_hadamard_set(k, s);
        EXPECT_EQ(set.n(), ipow_sat(s, static_cast<unsigned>(k - 1)));
        EXPECT_EQ(set[0], identity(set.n()));
        const auto m = lcs_all_pairs(set);
        EXPECT_LE(m.max_pair(), hadamard_lcs_bound(k, s)) << "k=" << k << " s=" << s;
        EXPECT_GE(m.max_pair(), ceil_cbrt(set.n()));
        if (set.n() <= 2048) {
            for (const auto& pv : m.pairs()) EXPECT_EQ(pv.value, lcs_pair_dp(set[pv.i], set[pv.j]));
        }
    }
}

TEST(BuildHadamard, SizeCapAndOrders) {
    EXPECT_THROW(build_hadamard_set(8, 20), std::invalid_argument);          // 20^7 > 2^24
    EXPECT_THROW(build_hadamard_set(64, 1000), std::invalid_argument);       // overflow
    EXPECT_THROW(build_hadamard_set(4, 3, 26), std::invalid_argument);       // custom cap
    EXPECT_THROW(build_hadamard_set(6, 2), std::invalid_argument);           // no order-6 matrix
    EXPECT_THROW(build_hadamard_set(28, 1), std::invalid_argument);          // unsupported order
    EXPECT_NO_THROW(build_hadamard_set(4, 3, 27));
}

TEST(BuildHadamard, ArbitraryNRestricts) {
    const PermSet s = build_hadamard_for_n(4, 20);
    EXPECT_EQ(s.n(), 20u);
    EXPECT_EQ(s.provenance().params.at("s"), 3);
    const PermSet full = build_hadamard_set(4, 3);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(s[i], restrict(full[i], 20));
    EXPECT_LE(lcs_all_pairs(s).max_pair(), 3u);
}

} // namespace

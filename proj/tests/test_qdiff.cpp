#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"
#include "wstrass/qdiff.hpp"

using namespace wstrass;

namespace {

const UniPoly kX5p1{1, 0, 0, 0, 0, 1};
const UniPoly kX4m1{-1, 0, 0, 0, 1};
const UniPoly kX6p3{3, 0, 0, 0, 0, 0, 1};

std::vector<std::pair<int, int>> pairs(const std::vector<ExponentPair>& v) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : v)
        out.emplace_back(e.a, e.b);
    return out;
}

} // namespace

TEST(DimensionDq, Examples) {
    EXPECT_EQ(dimension_dq(2, 1), 2);
    EXPECT_EQ(dimension_dq(2, 2), 3);
    EXPECT_EQ(dimension_dq(3, 3), 10);
    EXPECT_THROW(dimension_dq(2, 0), DomainError);
}

TEST(EnumerateBasis, Examples) {
    using P = std::vector<std::pair<int, int>>;
    auto c = new_curve(2, kX5p1);
    EXPECT_EQ(pairs(enumerate_basis(c, 1)), (P{{0, 0}, {1, 0}}));
    EXPECT_EQ(pairs(enumerate_basis(c, 2)), (P{{0, 0}, {1, 0}, {2, 0}}));
    EXPECT_EQ(pairs(enumerate_basis(new_curve(3, kX4m1), 1)), (P{{0, 0}, {0, 1}, {1, 0}}));
    EXPECT_THROW(enumerate_basis(c, 0), DomainError);
}

TEST(BranchGaps, Examples) {
    auto c25 = new_curve(2, kX5p1);
    EXPECT_EQ(branch_gap_sequence(c25, 1).gaps, (std::vector<int>{1, 3}));
    EXPECT_EQ(branch_gap_sequence(c25, 1).weight, 1);
    EXPECT_EQ(branch_gap_sequence(c25, 2).gaps, (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(branch_gap_sequence(c25, 2).weight, 3);
    auto c34 = new_curve(3, kX4m1);
    EXPECT_EQ(branch_gap_sequence(c34, 1).gaps, (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(branch_weight(c34, 1), 1);
    EXPECT_EQ(branch_weight(new_curve(2, kX6p3), 2), 3);
    EXPECT_EQ(branch_weight(c25, 1), 1);
}

TEST(InfiniteGaps, Examples) {
    auto g25 = infinite_gap_data(new_curve(2, kX5p1));
    EXPECT_EQ(g25.gaps, (std::vector<int>{1, 3}));
    EXPECT_EQ(g25.weight, 1);
    auto g34 = infinite_gap_data(new_curve(3, kX4m1));
    EXPECT_EQ(g34.gaps, (std::vector<int>{1, 2, 5}));
    EXPECT_EQ(g34.weight, 2);
    EXPECT_THROW(infinite_gap_data(new_curve(2, kX6p3)), DomainError);
}

TEST(TotalWeight, Examples) {
    EXPECT_EQ(total_weight(2, 1), 6);
    EXPECT_EQ(total_weight(3, 1), 24);
    EXPECT_EQ(total_weight(2, 2), 18);
    EXPECT_THROW(total_weight(2, 0), DomainError);
    EXPECT_EQ(total_inflectionary_weight(2, 4, 3), 24);
    EXPECT_EQ(total_inflectionary_weight(0, 0, 7), 0);
    EXPECT_EQ(total_inflectionary_weight(2, 4, 2), 18);
}

TEST(TotalWeight, InflectionaryFormulaSpecialises) {
    for (long g = 2; g <= 10; ++g)
        for (long q = 1; q <= 5; ++q) {
            const long r = dimension_dq(static_cast<int>(g), static_cast<int>(q)) - 1;
            EXPECT_EQ(total_inflectionary_weight(r, q * (2 * g - 2), g),
                      total_weight(static_cast<int>(g), static_cast<int>(q)));
        }
}

TEST(BasisGrid, SizeDistinctOrdersPositivityCap) {
    std::mt19937_64 rng(wstrass::testing::kGridSeed);
    for (int n = 2; n <= 11; ++n) {
        for (int d = n + 1; d <= 12; ++d) {
            if (genus(n, d) < 2)
                continue;
            auto c = new_curve(n, wstrass::testing::random_separable_monic(rng, d));
            const int g = c.genus();
            for (int q = 1; q <= 4; ++q) {
                auto basis = enumerate_basis(c, q);
                EXPECT_EQ(static_cast<int>(basis.size()), dimension_dq(g, q)) << n << "," << d << "," << q;
                std::set<int> orders;
                for (const auto& e : basis) {
                    EXPECT_LE(e.a * n + e.b * d, (2 * g - 2) * q);
                    orders.insert(e.a * n + e.b);
                }
                EXPECT_EQ(orders.size(), basis.size());
                EXPECT_GE(branch_weight(c, q), 1);
                EXPECT_LE(static_cast<long>(d) * branch_weight(c, q), total_weight(g, q));
            }
            const long w = branch_weight(c, 1);
            const long cap = static_cast<long>(g) * (g - 1) / 2;
            EXPECT_LE(w, cap);
            EXPECT_EQ(w == cap, n == 2) << n << "," << d;
        }
    }
}

TEST(BasisGrid, HyperellipticAccounting) {
    std::mt19937_64 rng(wstrass::testing::kGridSeed + 1);
    for (int d = 5; d <= 12; ++d) {
        auto c = new_curve(2, wstrass::testing::random_separable_monic(rng, d));
        const long g = c.genus();
        long sum = d * branch_weight(c, 1);
        if (d % 2 == 1)
            sum += infinite_gap_data(c).weight;
        EXPECT_EQ(sum, g * g * g - g) << "d = " << d;
    }
}

TEST(GapSequences, SmallGenusLists) {
    auto g1 = enumerate_gap_sequences(1);
    ASSERT_EQ(g1.size(), 1u);
    EXPECT_EQ(g1[0].gaps, (std::vector<int>{1}));
    auto g2 = enumerate_gap_sequences(2);
    ASSERT_EQ(g2.size(), 2u);
    EXPECT_EQ(g2[0].gaps, (std::vector<int>{1, 2}));
    EXPECT_EQ(g2[1].gaps, (std::vector<int>{1, 3}));
    auto g3 = enumerate_gap_sequences(3);
    std::vector<std::vector<int>> got;
    for (const auto& s : g3)
        got.push_back(s.gaps);
    EXPECT_EQ(got, (std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5}}));
    EXPECT_THROW(enumerate_gap_sequences(10), DomainError);
    EXPECT_THROW(enumerate_gap_sequences(0), DomainError);
}

TEST(GapSequences, MatchBruteForce) {
    for (int g = 1; g <= 7; ++g) {
        std::vector<std::vector<int>> got;
        for (const auto& s : enumerate_gap_sequences(g))
            got.push_back(s.gaps);
        EXPECT_EQ(got, wstrass::testing::brute_force_gap_sequences(g)) << "g = " << g;
    }
}

TEST(GapSequences, KnownCounts) {
    // Numerical semigroups by genus.
    const std::vector<std::size_t> counts{1, 2, 4, 7, 12, 23, 39, 67, 118};
    for (int g = 1; g <= 9; ++g)
        EXPECT_EQ(enumerate_gap_sequences(g).size(), counts[static_cast<std::size_t>(g - 1)]);
}

TEST(GapSequences, GenusThreeMembership) {
    auto c = new_curve(3, kX4m1);
    auto all = enumerate_gap_sequences(3);
    auto contains = [&](const GapSequence& s) { return std::find(all.begin(), all.end(), s) != all.end(); };
    EXPECT_TRUE(contains(branch_gap_sequence(c, 1)));
    EXPECT_TRUE(contains(infinite_gap_data(c)));
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rimhook/tableaux.hpp"

using namespace rimhook;

namespace {

// Shape (3,2,2,1,1), type (4,4,1); hook signs +1, -1, +1.
SpecialRimHookTableau nine_cell_example() {
    return SpecialRimHookTableau(Partition{3, 2, 2, 1, 1},
                                 {RimHook({{5, 1}, {4, 1}, {3, 1}, {3, 2}}),
                                  RimHook({{2, 1}, {2, 2}, {1, 2}, {1, 3}}), RimHook({{1, 1}})});
}

} // namespace

TEST(Ssyt, Examples) {
    EXPECT_EQ(enumerate_ssyt({1, 1, 1}, Partition{1, 1, 1}).size(), 1u);
    EXPECT_EQ(enumerate_ssyt({2, 1}, Partition{1, 1, 1}).size(), 2u);
    EXPECT_TRUE(enumerate_ssyt({1, 1}, Partition{2}).empty());
}

TEST(Ssyt, ConstructorValidates) {
    EXPECT_NO_THROW(SemistandardTableau({{1, 1, 2}, {2, 3}}));
    EXPECT_THROW(SemistandardTableau({{2, 1}}), std::invalid_argument);
    EXPECT_THROW(SemistandardTableau({{1, 2}, {1}}), std::invalid_argument);
    EXPECT_THROW(SemistandardTableau({{1}, {2, 3}}), std::invalid_argument);
}

TEST(Ssyt, CountsMatchPermutationOracle) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& mu : enumerate_partitions(n)) {
                const auto ts = enumerate_ssyt(lambda, mu);
                EXPECT_EQ(static_cast<long long>(ts.size()), oracle::ssyt_count(lambda.parts(), mu.parts()))
                    << to_string(lambda) << " " << to_string(mu);
                for (const auto& t : ts) {
                    EXPECT_EQ(t.shape(), lambda);
                    std::vector<int> want = mu.parts();
                    EXPECT_EQ(t.content(), want);
                }
            }
}

TEST(Ssyt, UnitriangularCounts) {
    for (int n = 1; n <= 7; ++n) {
        const auto ps = enumerate_partitions(n);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            EXPECT_EQ(enumerate_ssyt(ps[i], ps[i]).size(), 1u);
            for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(enumerate_ssyt(ps[i], ps[j]).empty());
        }
    }
}

TEST(Ssyt, StandardTableaux) {
    for (const auto& t : enumerate_syt({3, 2})) EXPECT_TRUE(t.is_standard());
    EXPECT_EQ(enumerate_syt({3, 2}).size(), 5u);
    EXPECT_EQ(enumerate_syt({3, 2, 1}).size(), 16u);
    const SemistandardTableau t({{1, 3}, {2, 5}, {4}, {6}});
    EXPECT_EQ(t.find(5), (Cell{2, 2}));
    EXPECT_FALSE(t.find(7).has_value());
}

TEST(RimHook, ValidatesSteps) {
    EXPECT_NO_THROW(RimHook({{2, 1}, {1, 1}, {1, 2}}));
    EXPECT_THROW(RimHook({{1, 1}, {2, 1}}), std::invalid_argument);
    EXPECT_THROW(RimHook({{1, 1}, {1, 3}}), std::invalid_argument);
    EXPECT_THROW(RimHook(std::vector<Cell>{}), std::invalid_argument);
}

TEST(RimHook, PermissibleCellsOfTheUpperHook) {
    const RimHook h({{2, 1}, {2, 2}, {1, 2}, {1, 3}});
    EXPECT_EQ(permissible_cells(h), (std::set<Cell>{{1, 2}, {2, 2}, {1, 3}, {2, 1}}));
    EXPECT_TRUE(h.is_internal_corner({1, 2}));
    EXPECT_TRUE(h.is_external_corner({2, 2}));
    EXPECT_EQ(h.head(), (Cell{1, 3}));
    EXPECT_EQ(h.tail(), (Cell{2, 1}));
}

TEST(RimHook, PermissibleCellsOfStraightHooks) {
    EXPECT_EQ(permissible_cells(RimHook({{3, 1}})), (std::set<Cell>{{3, 1}}));
    EXPECT_EQ(permissible_cells(RimHook({{1, 1}, {1, 2}, {1, 3}})), (std::set<Cell>{{1, 1}, {1, 3}}));
}

TEST(Srht, SignExamples) {
    const auto s = nine_cell_example();
    EXPECT_EQ(s.type(), Partition({4, 4, 1}));
    EXPECT_EQ(sign(s), -1);
    std::vector<int> signs;
    for (const auto& h : s.hooks()) signs.push_back(h.sign());
    std::sort(signs.begin(), signs.end());
    EXPECT_EQ(signs, (std::vector<int>{-1, 1, 1}));

    const auto col = enumerate_srht({1, 1, 1, 1}, Partition{1, 1, 1, 1});
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(col.front().sign(), 1);
    EXPECT_EQ(SpecialRimHookTableau(Partition{1, 1}, {RimHook({{2, 1}, {1, 1}})}).sign(), -1);
}

TEST(Srht, EnumerationContainsTheNineCellExample) {
    const auto all = enumerate_srht({3, 2, 2, 1, 1}, Partition{4, 4, 1});
    EXPECT_NE(std::find(all.begin(), all.end(), nine_cell_example()), all.end());
}

TEST(Srht, ConstructorRejectsBadTableaux) {
    EXPECT_THROW(SpecialRimHookTableau(Partition{2}, {RimHook({{1, 2}}), RimHook({{1, 1}})}),
                 std::invalid_argument);
    EXPECT_THROW(SpecialRimHookTableau(Partition{2, 1}, {RimHook({{1, 1}, {1, 2}})}), std::invalid_argument);
    EXPECT_THROW(SpecialRimHookTableau(Partition{2}, {RimHook({{1, 1}, {1, 2}}), RimHook({{1, 1}})}),
                 std::invalid_argument);
}

TEST(Srht, SignedCountsMatchSetPartitionOracle) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto want = oracle::signed_srht_counts(lambda.parts());
            for (const auto& mu : enumerate_partitions(n)) {
                const auto ss = enumerate_srht(lambda, mu);
                long long got = 0;
                for (const auto& s : ss) got += s.sign();
                auto it = want.find(mu.parts());
                const long long expect = it == want.end() ? 0 : it->second.convert_to<long long>();
                EXPECT_EQ(got, expect) << to_string(lambda) << " " << to_string(mu);
            }
        }
}

TEST(Srht, EnumeratedTableauxAreValidAndDistinct) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& mu : enumerate_partitions(n)) {
                const auto ss = enumerate_srht(lambda, mu);
                std::set<std::vector<RimHook>> seen;
                for (const auto& s : ss) {
                    EXPECT_EQ(s.shape(), lambda);
                    EXPECT_EQ(s.type(), mu);
                    std::set<Cell> covered;
                    for (const auto& h : s.hooks()) {
                        EXPECT_TRUE(h.is_special());
                        for (const Cell& c : h.cells()) EXPECT_TRUE(covered.insert(c).second);
                        EXPECT_TRUE(h.is_permissible(h.head()));
                        EXPECT_TRUE(h.is_permissible(h.tail()));
                    }
                    EXPECT_EQ(covered, cells(lambda));
                    EXPECT_TRUE(seen.insert(s.hooks()).second);
                }
            }
}

TEST(Srht, TwoByTwoShapeOfTypeThreeOne) {
    const auto ss = enumerate_srht({2, 2}, Partition{3, 1});
    const auto want = oracle::signed_srht_counts({2, 2});
    long long total = 0;
    for (const auto& s : ss) total += s.sign();
    EXPECT_EQ(total, want.at({3, 1}).convert_to<long long>());
    EXPECT_EQ(ss.size(), 1u);
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rimhook/partitions.hpp"

using namespace rimhook;

TEST(Partition, RejectsIncreasingOrNonPositiveParts) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_NO_THROW(Partition({2, 2, 1}));
}

TEST(Partition, BasicAccessors) {
    const Partition p{3, 2, 2, 1, 1};
    EXPECT_EQ(p.size(), 9);
    EXPECT_EQ(p.length(), 5u);
    EXPECT_EQ(p.part(1), 3);
    EXPECT_EQ(p.part(6), 0);
    EXPECT_EQ(p.multiplicity(1), 2);
    EXPECT_TRUE(p.contains({3, 2}));
    EXPECT_FALSE(p.contains({3, 3}));
    EXPECT_TRUE(Partition({1, 1, 1}).is_single_column());
    EXPECT_EQ(Partition::from_unsorted({1, 4, 4}), Partition({4, 4, 1}));
}

TEST(Enumerate, SmallCases) {
    EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition{}});
    EXPECT_EQ(enumerate_partitions(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
    const auto four = enumerate_partitions(4);
    ASSERT_EQ(four.size(), 5u);
    EXPECT_EQ(four.front(), Partition({4}));
    EXPECT_EQ(four.back(), Partition({1, 1, 1, 1}));
}

TEST(Enumerate, MatchesCompositionOracleInOrder) {
    for (int n = 0; n <= 10; ++n) {
        const auto got = enumerate_partitions(n);
        const auto want = oracle::partitions(n);
        ASSERT_EQ(got.size(), want.size()) << "n=" << n;
        for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].parts(), want[i]);
    }
}

TEST(RevLex, IsAStrictTotalOrder) {
    for (int n = 1; n <= 8; ++n) {
        const auto ps = enumerate_partitions(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j) {
                const bool lt = revlex_less(ps[i], ps[j]);
                const bool gt = revlex_less(ps[j], ps[i]);
                if (i == j) EXPECT_FALSE(lt || gt);
                else EXPECT_NE(lt, gt);
                EXPECT_EQ(lt, i < j);
            }
    }
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate({3, 2, 2, 1, 1}), Partition({5, 3, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate({1, 1, 1}), Partition({3}));
}

TEST(Conjugate, InvolutionAndTransposeOracle) {
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            EXPECT_EQ(conjugate(conjugate(p)), p);
            EXPECT_EQ(conjugate(p).parts(), oracle::transpose(p.parts()));
        }
}

TEST(Cells, Examples) {
    EXPECT_EQ(cells({2, 1}), (std::set<Cell>{{1, 1}, {1, 2}, {2, 1}}));
    EXPECT_TRUE(cells(Partition{}).empty());
    const auto c = cells({3, 2, 2, 1, 1});
    EXPECT_EQ(c.size(), 9u);
    EXPECT_TRUE(c.count({3, 2}));
    EXPECT_FALSE(c.count({3, 3}));
}

TEST(Cells, SizeAndRoundTrip) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            const auto c = cells(p);
            EXPECT_EQ(static_cast<int>(c.size()), n);
            EXPECT_TRUE(is_ferrers_diagram(c));
            EXPECT_EQ(Partition::from_cells(c), p);
        }
    EXPECT_FALSE(is_ferrers_diagram({{1, 2}}));
    EXPECT_THROW(Partition::from_cells({{1, 1}, {2, 2}}), std::invalid_argument);
}

TEST(Text, FormatAndParse) {
    const Partition p{3, 2, 2, 1, 1};
    EXPECT_EQ(to_string(p), "[3,2,2,1,1]");
    EXPECT_EQ(to_string(Partition{}), "[]");
    EXPECT_EQ(to_multiplicity_string({3, 2, 2, 1, 1}), "1^2 2^2 3");
    EXPECT_EQ(parse_partition("[3,2,2,1,1]"), p);
    EXPECT_EQ(parse_partition(" [ 3 , 2,2,1,1 ] "), p);
    EXPECT_EQ(parse_partition("1^2 2^2 3"), p);
    EXPECT_EQ(parse_partition("3,2,2,1,1"), p);
    EXPECT_EQ(parse_partition("[]"), Partition{});
    for (int n = 0; n <= 7; ++n)
        for (const auto& q : enumerate_partitions(n)) {
            EXPECT_EQ(parse_partition(to_string(q)), q);
            EXPECT_EQ(parse_partition(to_multiplicity_string(q)), q);
        }
}

TEST(Text, RejectsMalformedInput) {
    for (const char* bad : {"[1,2]", "[3,", "[3,,1]", "[0]", "[a]", "2,,1", "x"})
        EXPECT_THROW(parse_partition(bad), std::invalid_argument) << bad;
}

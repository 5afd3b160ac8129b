#include <gtest/gtest.h>

#include "aw/error.hpp"
#include "aw/fockspace.hpp"

using aw::MultiIndex;
using aw::TruncatedBasis;

TEST(Fockspace, TwoLegsOrder) {
    auto b = aw::enumerate(2, 1);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b.state(0), (MultiIndex{{0, 0}}));
    EXPECT_EQ(b.state(1), (MultiIndex{{0, 1}}));
    EXPECT_EQ(b.state(2), (MultiIndex{{1, 0}}));
}

TEST(Fockspace, Sizes) {
    EXPECT_EQ(aw::enumerate(4, 6).size(), 210u);
    EXPECT_EQ(aw::enumerate(3, 2).block(2).size(), 6u);
    EXPECT_EQ(aw::enumerate(4, 6).block(6).size(), 84u);
}

TEST(Fockspace, IndexOf) {
    auto b = aw::enumerate(2, 1);
    EXPECT_EQ(b.index_of(MultiIndex{{0, 0}}), 0u);
    EXPECT_EQ(b.index_of(MultiIndex{{1, 0}}), 2u);
    EXPECT_THROW(b.index_of(MultiIndex{{2, 0}}), aw::OutOfRange);
    EXPECT_THROW(b.index_of(MultiIndex{{-1, 1}}), aw::OutOfRange);
    EXPECT_THROW(b.index_of(MultiIndex{{0, 0, 0}}), aw::OutOfRange);
}

TEST(Fockspace, InvalidConfig) {
    EXPECT_THROW(aw::enumerate(1, 3), aw::InvalidConfig);
    EXPECT_THROW(aw::enumerate(5, 3), aw::InvalidConfig);
    EXPECT_THROW(aw::enumerate(3, 0), aw::InvalidConfig);
    EXPECT_THROW(aw::enumerate(3, 2).block(3), aw::OutOfRange);
}

class FockspaceProperty : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FockspaceProperty, GradedLexInvariants) {
    auto [legs, nmax] = GetParam();
    TruncatedBasis b(legs, nmax);
    EXPECT_EQ(b.size(), aw::binomial(nmax + legs, legs));
    std::size_t covered = 0;
    for (int w = 0; w <= nmax; ++w) {
        auto r = b.block(w);
        EXPECT_EQ(r.begin, covered);
        EXPECT_EQ(r.size(), aw::binomial(w + legs - 1, legs - 1));
        for (std::size_t i = r.begin; i < r.end; ++i)
            EXPECT_EQ(b.state(i).weight(), w);
        covered = r.end;
    }
    EXPECT_EQ(covered, b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        EXPECT_EQ(b.index_of(b.state(i)), i);
        if (i > 0) {
            const auto &prev = b.state(i - 1), &cur = b.state(i);
            EXPECT_TRUE(prev.weight() < cur.weight() || (prev.weight() == cur.weight() && prev < cur));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(AllShapes, FockspaceProperty,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 5}, std::pair{3, 1}, std::pair{3, 4},
                                           std::pair{4, 1}, std::pair{4, 3}, std::pair{4, 6}));

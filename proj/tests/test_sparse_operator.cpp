#include <random>

#include <gtest/gtest.h>

#include "aw/error.hpp"
#include "aw/sparse_operator.hpp"
#include "test_util.hpp"

using aw::Rational;
using aw::SparseOperator;

namespace {

aw::BasisPtr basis(int legs, int nmax) { return std::make_shared<const aw::TruncatedBasis>(legs, nmax); }

} // namespace

TEST(SparseOperator, IdentityAndZero) {
    auto b = basis(3, 2);
    auto id = SparseOperator::identity(b);
    EXPECT_EQ(id.nnz(), b->size());
    EXPECT_TRUE(SparseOperator::zero(b).is_zero());
    EXPECT_FALSE(id.is_zero());
    EXPECT_TRUE((id - id).is_zero());
    EXPECT_EQ(id * id, id);
    EXPECT_EQ(id.entry(4, 4), Rational(1));
    EXPECT_EQ(id.entry(3, 4), Rational(0));
}

TEST(SparseOperator, NoStoredZeros) {
    auto b = basis(2, 2);
    SparseOperator op(b, 0);
    op.add_entry(1, 1, Rational(3, 2));
    op.add_entry(1, 1, Rational(-3, 2));
    EXPECT_EQ(op.nnz(), 0u);
    op.set_column(2, {{2, Rational(0)}, {1, Rational(5)}});
    EXPECT_EQ(op.column(2).size(), 1u);
    EXPECT_EQ((op * Rational(0)).nnz(), 0u);
}

TEST(SparseOperator, BasisMismatch) {
    auto a = SparseOperator::identity(basis(2, 2));
    auto c = SparseOperator::identity(basis(3, 2));
    EXPECT_THROW(a + c, aw::BasisMismatch);
    EXPECT_THROW(a * c, aw::BasisMismatch);
    EXPECT_THROW(aw::multiply_reference(a, c), aw::BasisMismatch);
    EXPECT_FALSE(a == c);
}

TEST(SparseOperator, WeightDegreeComposition) {
    auto b = basis(2, 3);
    SparseOperator up(b, 1), down(b, -1);
    up.add_entry(1, 0, Rational(2));
    down.add_entry(0, 1, Rational(3));
    EXPECT_EQ((up * down).weight_degree(), 0);
    EXPECT_EQ((up * up).weight_degree(), 2);
    EXPECT_EQ((up + down).weight_degree(), std::nullopt);
    EXPECT_EQ((up + SparseOperator::zero(b, 0)).weight_degree(), 1);
    EXPECT_TRUE(up.respects_degree());
    EXPECT_EQ((up * down).entry(1, 1), Rational(6));
}

TEST(SparseOperator, Restriction) {
    auto b = basis(2, 2);
    auto id = SparseOperator::identity(b);
    EXPECT_EQ(id.restricted_to_weight(1).nnz(), 3u);
    EXPECT_EQ(id.restricted_to_block(2).nnz(), 3u);
    EXPECT_EQ(id.restricted_to_block(0).nnz(), 1u);
    EXPECT_TRUE(id.is_block_diagonal());
}

TEST(SparseOperatorProperty, KernelsAgree) {
    std::mt19937 rng(2024);
    auto b = basis(3, 3);
    for (int n = 0; n < 25; ++n) {
        auto x = aw::testing::random_operator(b, rng, 0.15);
        auto y = aw::testing::random_operator(b, rng, 0.15);
        EXPECT_EQ(aw::multiply_reference(x, y), aw::multiply_fraction_free(x, y));
    }
}

TEST(SparseOperatorProperty, RingLaws) {
    std::mt19937 rng(77);
    auto b = basis(3, 2);
    for (int n = 0; n < 10; ++n) {
        auto x = aw::testing::random_operator(b, rng, 0.2);
        auto y = aw::testing::random_operator(b, rng, 0.2);
        auto z = aw::testing::random_operator(b, rng, 0.2);
        Rational s = aw::testing::random_rational(rng);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(s * (x * y), (s * x) * y);
        EXPECT_EQ(x + y, y + x);
        EXPECT_TRUE((x - x).is_zero());
    }
}

TEST(SparseOperatorProperty, BlockDiagonalClosedUnderProduct) {
    std::mt19937 rng(5);
    auto b = basis(4, 3);
    for (int n = 0; n < 5; ++n) {
        auto x = aw::testing::random_block_operator(b, rng);
        auto y = aw::testing::random_block_operator(b, rng);
        EXPECT_TRUE((x * y).is_block_diagonal());
        EXPECT_EQ(aw::multiply_reference(x, y), x * y);
    }
}

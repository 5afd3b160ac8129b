#include <random>

#include <gtest/gtest.h>

#include "aw/error.hpp"
#include "aw/opalgebra.hpp"
#include "test_util.hpp"

using aw::GeneratorLabel;
using aw::GeneratorRegistry;
using aw::Parity;
using aw::Rational;
using aw::RepParams;
using aw::SparseOperator;
using L = aw::GeneratorLabel;

namespace {

const GeneratorRegistry &small_registry() {
    static const GeneratorRegistry reg = GeneratorRegistry::build(RepParams{Rational(5, 3), {1, 2, 1, 3}, 4, 3});
    return reg;
}

aw::BasisPtr basis(int legs, int nmax) { return std::make_shared<const aw::TruncatedBasis>(legs, nmax); }

} // namespace

TEST(Labels, NamesRoundTrip) {
    for (L l : aw::all_labels()) {
        auto parsed = aw::parse_label(aw::name(l));
        ASSERT_TRUE(parsed);
        EXPECT_EQ(*parsed, l);
    }
    EXPECT_EQ(aw::parse_label("12"), L::Q12);
    EXPECT_EQ(aw::parse_label("IQ24"), L::IQ24);
    EXPECT_FALSE(aw::parse_label("Q5"));
    EXPECT_FALSE(aw::parse_label("IQ12"));
}

TEST(Labels, Classification) {
    EXPECT_EQ(aw::parity(L::Q0), Parity::Central);
    EXPECT_EQ(aw::parity(L::Q3), Parity::Central);
    EXPECT_EQ(aw::parity(L::Q1234), Parity::Central);
    EXPECT_EQ(aw::parity(L::Q234), Parity::Bosonic);
    EXPECT_EQ(aw::parity(L::Q124), Parity::Fermionic);
    EXPECT_EQ(aw::parity(L::IQ124), Parity::Fermionic);
    EXPECT_EQ(aw::subset_mask(L::Q134), 0b1101u);
    EXPECT_EQ(aw::subset_mask(L::Q0), 0u);
    EXPECT_EQ(aw::max_leg(L::Q23), 3);
    EXPECT_EQ(aw::label_for_subset(0b0101), L::Q13);
    EXPECT_EQ(aw::label_for_subset(0b0101, true), L::IQ13);
    EXPECT_EQ(aw::label_for_subset(0b0011, true), L::Q12);
    EXPECT_THROW(aw::label_for_subset(0b10000), aw::OutOfRange);
    EXPECT_EQ(aw::subset_name(0b1011), "124");
    EXPECT_EQ(aw::noncentral_labels().size(), 15u);
}

TEST(Labels, Involution) {
    EXPECT_EQ(aw::involution(L::Q13), L::IQ13);
    EXPECT_EQ(aw::involution(L::IQ134), L::Q134);
    EXPECT_EQ(aw::involution(L::Q23), L::Q23);
    EXPECT_EQ(aw::involution(L::Q0), L::Q0);
    const std::vector<L> mono{L::Q1, L::Q24, L::Q12};
    const std::vector<L> expected{L::Q1, L::IQ24, L::Q12};
    EXPECT_EQ(aw::involute_monomial(mono), expected);
    for (L l : aw::all_labels())
        EXPECT_EQ(aw::involution(aw::involution(l)), l);
}

TEST(QCommutator, Examples) {
    auto b = basis(2, 2);
    const Rational q(5, 3);
    std::mt19937 rng(3);
    auto x = aw::testing::random_block_operator(b, rng);
    EXPECT_EQ(aw::q_commutator(q, x, x), (q - q.inv()) * (x * x));
    auto id = SparseOperator::identity(b);
    EXPECT_EQ(aw::q_commutator(q, x, id), (q - q.inv()) * x);
    auto one = basis(2, 1);
    auto a = Rational(3) * SparseOperator::identity(one), c = Rational(5) * SparseOperator::identity(one);
    EXPECT_EQ(aw::q_commutator(Rational(2), a, c).entry(0, 0), Rational(45, 2));
    EXPECT_TRUE(aw::commutator(a, c).is_zero());
    EXPECT_EQ(aw::anticommutator(a, c).entry(0, 0), Rational(30));
}

TEST(QCommutatorProperty, Antisymmetry) {
    std::mt19937 rng(11);
    auto b = basis(3, 2);
    for (int n = 0; n < 10; ++n) {
        const Rational q = aw::testing::random_nonzero(rng, 9);
        auto x = aw::testing::random_block_operator(b, rng);
        auto y = aw::testing::random_block_operator(b, rng);
        EXPECT_TRUE((aw::q_commutator(q, x, y) + aw::q_commutator(q.inv(), y, x)).is_zero());
        EXPECT_EQ(aw::commutator(x, y), aw::q_commutator(Rational(1), x, y));
        EXPECT_EQ(aw::anticommutator(x, y), aw::anticommutator(y, x));
    }
}

TEST(Registry, CentralElements) {
    const auto &reg = small_registry();
    auto id = SparseOperator::identity(reg.basis());
    EXPECT_EQ(reg[L::Q0], Rational(-1) * id);
    EXPECT_EQ(reg[L::Q1], Rational(-1) * id);
    EXPECT_EQ(reg.labels().size(), aw::kLabelCount);
    for (L l : aw::all_labels())
        if (aw::parity(l) == Parity::Central && aw::subset_mask(l) != 0 && std::popcount(aw::subset_mask(l)) == 1)
            EXPECT_EQ(reg[l].nnz(), id.nnz());
}

TEST(Registry, DerivedGeneratorsCommuteWithSpectators) {
    const auto &reg = small_registry();
    EXPECT_TRUE(aw::commutator(reg[L::Q13], reg[L::Q2]).is_zero());
    EXPECT_TRUE(aw::commutator(reg[L::Q24], reg[L::Q1234]).is_zero());
    EXPECT_FALSE(aw::commutator(reg[L::Q13], reg[L::Q12]).is_zero());
}

TEST(Registry, InvolutedVariantsDiffer) {
    const auto &reg = small_registry();
    for (L f : aw::fermionic_labels()) {
        EXPECT_NE(reg[f], reg[aw::involution(f)]) << aw::name(f);
        EXPECT_TRUE(reg[f].is_block_diagonal()) << aw::name(f);
        EXPECT_TRUE(reg[aw::involution(f)].is_block_diagonal()) << aw::name(f);
    }
}

TEST(Registry, DefinitionMatchesStoredOperator) {
    const auto &reg = small_registry();
    for (L f : aw::fermionic_labels()) {
        EXPECT_EQ(reg.evaluate_definition(f, false), reg[f]) << aw::name(f);
        EXPECT_EQ(reg.evaluate_definition(f, true), reg[aw::involution(f)]) << aw::name(f);
        auto def = aw::derived_definition(f);
        EXPECT_EQ(aw::parity(def.left), Parity::Bosonic);
        EXPECT_EQ(aw::parity(def.right), Parity::Bosonic);
    }
    EXPECT_THROW(aw::derived_definition(L::Q12), aw::Error);
}

TEST(Registry, ThreeLegsHasNoFourLegLabels) {
    auto reg = GeneratorRegistry::build(RepParams{Rational(2, 5), {2, 1, 1}, 3, 2});
    EXPECT_TRUE(reg.has(L::Q13));
    EXPECT_TRUE(reg.has(L::IQ13));
    EXPECT_TRUE(reg.has(L::Q123));
    EXPECT_FALSE(reg.has(L::Q24));
    EXPECT_FALSE(reg.has(L::Q4));
    EXPECT_THROW(reg.at(L::Q34), aw::Error);
}

#include <gtest/gtest.h>

#include "aw/spectra.hpp"

using aw::Rational;
using aw::RepParams;

TEST(Eigenvalue, ClosedForms) {
    for (auto q : {Rational(2), Rational(5, 3), Rational(2, 5), Rational(-7, 4)})
        EXPECT_EQ(aw::casimir_eigenvalue(q, 1), Rational(-1));
    EXPECT_EQ(aw::casimir_eigenvalue(Rational(2), 2), Rational(-13, 4));
    EXPECT_EQ(aw::casimir_eigenvalue(Rational(2), 3), Rational(-205, 16));
    EXPECT_EQ(aw::casimir_eigenvalue_unshifted(Rational(2), 1), Rational(1, 2) / Rational(9, 4));
}

TEST(EigenvalueProperty, ReflectionSymmetry) {
    for (auto q : {Rational(2), Rational(5, 3), Rational(2, 5), Rational(-3, 7)})
        for (long kappa = -3; kappa <= 4; ++kappa)
            EXPECT_EQ(aw::casimir_eigenvalue(q, kappa), aw::casimir_eigenvalue(q, 1 - kappa));
}

TEST(EigenvalueProperty, ShiftConsistency) {
    for (auto q : {Rational(2), Rational(5, 3), Rational(2, 5)})
        for (long kappa = 1; kappa <= 6; ++kappa) {
            const Rational d = q - q.inv();
            const Rational shifted = -(d * d * aw::casimir_eigenvalue_unshifted(q, kappa) + Rational(2)) / (q + q.inv());
            EXPECT_EQ(shifted, aw::casimir_eigenvalue(q, kappa));
        }
}

TEST(Spectrum, Prediction) {
    RepParams p{Rational(2), {1, 1}, 2, 2};
    const auto v = aw::predicted_spectrum(p, {1, 2}, 1);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0], Rational(-13, 4));
    EXPECT_EQ(v[1], Rational(-205, 16));
    const auto single = aw::predicted_spectrum(p, {2, 2}, 2);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0], Rational(-1));
}

TEST(Spectrum, Annihilating) {
    auto reg = aw::GeneratorRegistry::build(RepParams{Rational(2), {1, 1}, 2, 3});
    for (int w = 0; w <= 3; ++w)
        EXPECT_TRUE(aw::check_annihilating(reg, {1, 2}, w).pass) << w;
    const auto all = aw::check_spectra(reg);
    EXPECT_EQ(all.size(), 3u * 4u);
    for (const auto &r : all)
        EXPECT_TRUE(r.pass) << r.id;
}

TEST(Spectrum, FourLegsAlternate) {
    auto reg = aw::GeneratorRegistry::build(RepParams{Rational(2, 5), {2, 1, 1, 1}, 4, 3});
    for (const auto &r : aw::check_spectra(reg))
        EXPECT_TRUE(r.pass) << r.id;
}

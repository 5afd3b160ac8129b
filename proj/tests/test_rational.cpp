#include <random>

#include <gtest/gtest.h>

#include "aw/error.hpp"
#include "aw/rational.hpp"
#include "test_util.hpp"

using aw::Rational;

TEST(Rational, AddExamples) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ((Rational(2, 3) + Rational(-2, 3)).str(), "0/1");
    EXPECT_EQ(Rational(5, 3) + Rational(3, 5), Rational(34, 15));
}

TEST(Rational, MulExamples) {
    EXPECT_EQ((Rational(6, 4) * Rational(2, 3)).str(), "1/1");
    EXPECT_EQ((Rational(-7, 9) * Rational(0)).str(), "0/1");
    EXPECT_EQ(Rational(-3, 2) * Rational(-3, 2), Rational(9, 4));
}

TEST(Rational, InverseKeepsDenominatorPositive) {
    EXPECT_EQ(Rational(5, 3).inv(), Rational(3, 5));
    EXPECT_EQ(Rational(-2, 7).inv().str(), "-7/2");
    EXPECT_THROW(Rational(0).inv(), aw::DivisionByZero);
}

TEST(Rational, IntegerPowers) {
    EXPECT_EQ(Rational(5, 3).pow(0), Rational(1));
    EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_THROW(Rational(0).pow(-1), aw::DivisionByZero);
    EXPECT_EQ(Rational(0).pow(3), Rational(0));
}

TEST(Rational, PowersBeyondMachineWords) {
    // (5/3)^40 has a 93-bit numerator.
    Rational big = Rational(5, 3).pow(40);
    EXPECT_EQ(big.numerator(), mpz_class("9094947017729282379150390625"));
    EXPECT_EQ(big.denominator(), mpz_class("12157665459056928801"));
    EXPECT_EQ(big * Rational(5, 3).pow(-40), Rational(1));
}

TEST(Rational, ParseExamples) {
    EXPECT_EQ(Rational::parse("5/3"), Rational(5, 3));
    EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("5/0"), aw::DivisionByZero);
    for (const char *bad : {"", "/", "1/", "/2", "a", "1.5", "1/-2", "--1", "1 /2", "3/4/5"})
        EXPECT_THROW(Rational::parse(bad), aw::ParseError) << bad;
}

TEST(Rational, CanonicalForm) {
    Rational r(10, -4);
    EXPECT_EQ(r.numerator(), -5);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(0, -9).str(), "0/1");
    EXPECT_THROW(Rational(1, 0), aw::DivisionByZero);
}

TEST(Rational, DerivedScalarsAtDefaultQ) {
    Rational q(5, 3);
    EXPECT_EQ(q - q.inv(), Rational(16, 15));
    EXPECT_EQ(q + q.inv(), Rational(34, 15));
}

TEST(RationalProperty, FieldAxioms) {
    std::mt19937 rng(12345);
    for (int n = 0; n < 500; ++n) {
        Rational a = aw::testing::random_rational(rng), b = aw::testing::random_rational(rng),
                 c = aw::testing::random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a + (-a)).is_zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inv(), Rational(1));
        }
        EXPECT_GT(a.denominator(), 0);
        EXPECT_EQ(gcd(a.numerator(), a.denominator()), a.is_zero() ? a.denominator() : mpz_class(1));
    }
}

TEST(RationalProperty, ParseFormatRoundTrip) {
    std::mt19937 rng(99);
    for (int n = 0; n < 500; ++n) {
        Rational a = aw::testing::random_rational(rng, 1'000'000) * Rational(7, 3).pow(n % 30 - 15);
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}

TEST(RationalProperty, PowerLaws) {
    std::mt19937 rng(7);
    for (int n = 0; n < 200; ++n) {
        Rational a = aw::testing::random_nonzero(rng, 20);
        int e = static_cast<int>(rng() % 21) - 10, f = static_cast<int>(rng() % 21) - 10;
        EXPECT_EQ(a.pow(e) * a.pow(f), a.pow(e + f));
    }
}

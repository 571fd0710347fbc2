#include <gtest/gtest.h>

#include <random>

#include "activol/rational.hpp"
#include "oracle/frac.hpp"

using activol::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, FloorCeilQuarters) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(69, 4).quarters(), 69);
  EXPECT_THROW(Rational(1, 3).quarters(), std::domain_error);
  EXPECT_EQ(Rational(1, 3).ceil_quarters(), 2);
  EXPECT_EQ(Rational(1, 8).ceil_quarters(), 1);
  EXPECT_TRUE(Rational(3, 4).is_quarter_multiple());
  EXPECT_FALSE(Rational(3, 8).is_quarter_multiple());
  EXPECT_EQ(Rational::from_quarters(239), Rational(239, 4));
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Rational(239, 4).decimal(), "59.75");
  EXPECT_EQ(Rational(5).decimal(), "5");
  EXPECT_EQ(Rational(-1, 2).decimal(), "-0.5");
  EXPECT_EQ(Rational(2, 3).decimal(3), "0.667");
  EXPECT_EQ(Rational(3345, 4).decimal(), "836.25");
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("17.25"), Rational(69, 4));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("42"), Rational(42));
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1e-6"), std::invalid_argument);
}

TEST(Rational, CeilLog2) {
  EXPECT_EQ(activol::ceil_log2(1), 0);
  EXPECT_EQ(activol::ceil_log2(2), 1);
  EXPECT_EQ(activol::ceil_log2(3), 2);
  EXPECT_EQ(activol::ceil_log2(1024), 10);
  EXPECT_EQ(activol::ceil_log2(1025), 11);
  EXPECT_THROW(activol::ceil_log2(0), std::invalid_argument);
}

TEST(Rational, OverflowIsReported) {
  Rational big(INT64_MAX / 2);
  EXPECT_THROW(big * 4, std::overflow_error);
}

// Property: field operations agree with the oracle fraction type.
TEST(RationalProperty, MatchesOracleArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> num(-500, 500), den(1, 60);
  for (int i = 0; i < 2000; ++i) {
    int64_t an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
    Rational a(an, ad), b(bn, bd);
    Frac fa(an, ad), fb(bn, bd);
    auto same = [](const Rational &r, const Frac &f) { return r.num() == f.n && r.den() == f.d; };
    ASSERT_TRUE(same(a + b, fa + fb));
    ASSERT_TRUE(same(a - b, fa - fb));
    ASSERT_TRUE(same(a * b, fa * fb));
    if (bn != 0) ASSERT_TRUE(same(a / b, fa / fb));
    ASSERT_EQ(a < b, static_cast<long double>(an) / ad < static_cast<long double>(bn) / bd);
    ASSERT_LE(a.floor(), a.to_double() + 1e-12);
    ASSERT_GE(a.ceil(), a.to_double() - 1e-12);
  }
}

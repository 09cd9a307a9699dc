#include <gtest/gtest.h>

#include <random>

#include "taylor/scalar.hpp"

using taylor::Rational;

TEST(Scalar, FromInt) {
  EXPECT_TRUE(taylor::from_int<Rational>(0).is_zero());
  EXPECT_TRUE(taylor::from_int<Rational>(1).is_one());
  EXPECT_EQ(taylor::from_int<Rational>(3), Rational(3));
  EXPECT_EQ(taylor::from_int<double>(3), 3.0);
}

TEST(Scalar, InvInt) {
  EXPECT_EQ(taylor::inv_int<Rational>(1), Rational(1));
  EXPECT_EQ(taylor::inv_int<Rational>(3), Rational(1, 3));
  EXPECT_EQ(taylor::inv_int<double>(4), 0.25);
  EXPECT_THROW(taylor::inv_int<Rational>(0), taylor::DomainError);
  for (long long n = 1; n <= 1000; ++n) {
    EXPECT_TRUE((taylor::inv_int<Rational>(n) * taylor::from_int<Rational>(n)).is_one());
    const double p = taylor::inv_int<double>(n) * taylor::from_int<double>(n);
    EXPECT_LE(std::fabs(p - 1.0), std::numeric_limits<double>::epsilon());
  }
}

TEST(Scalar, ApproxEq) {
  EXPECT_TRUE(taylor::approx_eq(Rational(1, 3), Rational(1, 3), Rational(0), Rational(0)));
  EXPECT_TRUE(taylor::approx_eq(0.1 + 0.2, 0.3, 1e-12, 1e-12));
  EXPECT_FALSE(taylor::approx_eq(1.0, 2.0, 1e-12, 1e-12));
  EXPECT_FALSE(taylor::approx_eq(Rational(1, 3), Rational(1, 3) + Rational(1, 1000000), Rational(1), Rational(1)));
}

TEST(Scalar, Normalization) {
  const Rational r(taylor::BigInt(6), taylor::BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
  EXPECT_THROW(Rational(taylor::BigInt(1), taylor::BigInt(0)), taylor::DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), taylor::DomainError);
}

TEST(Scalar, Parse) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-1.5e-3"), Rational(-3, 2000));
  EXPECT_EQ(Rational::parse("2E2"), Rational(200));
  EXPECT_THROW(Rational::parse("abc"), std::exception);
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
}

TEST(Scalar, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  for (int t = 0; t < 500; ++t) {
    const Rational a(taylor::BigInt(num(rng)), taylor::BigInt(den(rng)));
    const Rational b(taylor::BigInt(num(rng)), taylor::BigInt(den(rng)));
    const Rational c(taylor::BigInt(num(rng)), taylor::BigInt(den(rng)));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a * Rational(0)).is_zero());
    EXPECT_EQ(a + Rational(0), a);
  }
}

TEST(Scalar, NoOverflow) {
  Rational r(1);
  for (int i = 0; i < 100; ++i) r *= Rational(1000000007);
  EXPECT_EQ(r.to_string().size(), 901U);
}

TEST(Scalar, TranscendentalsRejectRationals) {
  EXPECT_THROW(taylor::exp(Rational(0)), taylor::DomainError);
  EXPECT_THROW(taylor::sin(Rational(0)), taylor::DomainError);
  EXPECT_THROW(taylor::cos(Rational(0)), taylor::DomainError);
  EXPECT_THROW(taylor::log(Rational(1)), taylor::DomainError);
}

TEST(Scalar, DoubleFormatting) {
  EXPECT_EQ(taylor::to_string(0.5), "0.5");
  EXPECT_EQ(std::stod(taylor::to_string(1.0 / 6.0)), 1.0 / 6.0);
}

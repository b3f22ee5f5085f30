#include <random>

#include <gtest/gtest.h>

#include "mimicnet/weight.hpp"
#include "support/error_matchers.hpp"

namespace mimicnet {
namespace {

TEST(Weight, ParsesCanonicalFractions) {
  EXPECT_EQ(Weight::parse("7/4").to_string(), "7/4");
  EXPECT_EQ(Weight::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Weight::parse("0/1"), Weight(0));
  EXPECT_EQ(Weight::parse("0/9").to_string(), "0/1");
  EXPECT_EQ(Weight(3).to_string(), "3/1");
}

TEST(Weight, RejectsMalformedText) {
  EXPECT_MIMICNET_ERROR(Weight::parse("3"), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight::parse("1/0"), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight::parse("-1/2"), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight::parse("1.5/2"), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight::parse("/2"), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight::parse("2/"), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight::parse(" 1/2"), ErrorCode::InvalidWeight);
}

TEST(Weight, RejectsNegativeValues) {
  EXPECT_MIMICNET_ERROR(Weight(-1), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight(Rational(-1, 3)), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight(BigInt(1), BigInt(-2)), ErrorCode::InvalidWeight);
  EXPECT_MIMICNET_ERROR(Weight(BigInt(1), BigInt(0)), ErrorCode::InvalidWeight);
}

TEST(Weight, ResidualSubtractionFloorsAtZero) {
  EXPECT_EQ(Weight::parse("5/2").residual_sub(Weight(1)), Weight::parse("3/2"));
  EXPECT_EQ(Weight(1).residual_sub(Weight(3)), Weight(0));
  EXPECT_TRUE(Weight(2).residual_sub(Weight(2)).is_zero());
}

TEST(Weight, HugeValuesStayExact) {
  const BigInt big = BigInt(1) << 300;
  const Weight w(big + 1, big);
  EXPECT_EQ(w.numerator(), big + 1);
  EXPECT_EQ(w.denominator(), big);
  EXPECT_GT(w, Weight(1));
  EXPECT_LT(w, Weight(2));
  EXPECT_EQ(Weight::parse(w.to_string()), w);
}

// Always reduced with a positive denominator; arithmetic matches mpq.
TEST(WeightProperty, ArithmeticAgreesWithRationals) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(0, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    Rational ca = a;
    Rational cb = b;
    ca.canonicalize();
    cb.canonicalize();
    const Weight wa(a);
    const Weight wb(b);
    EXPECT_EQ(gcd(wa.numerator(), wa.denominator()), 1);
    EXPECT_GT(wa.denominator(), 0);
    EXPECT_EQ((wa + wb).value(), Rational(ca + cb));
    EXPECT_EQ((wa * wb).value(), Rational(ca * cb));
    EXPECT_EQ(wa < wb, ca < cb);
    EXPECT_EQ(wa == wb, ca == cb);
    const Rational diff = ca - cb;
    EXPECT_EQ(wa.residual_sub(wb).value(), sgn(diff) > 0 ? diff : Rational(0));
    EXPECT_EQ(Weight::parse(wa.to_string()), wa);
  }
}

}  // namespace
}  // namespace mimicnet

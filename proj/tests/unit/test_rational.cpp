#include <gtest/gtest.h>

#include <random>

#include "bern/rational.hpp"

namespace bern {
namespace {

TEST(ExactRational, ReducesAndNormalizesSign) {
  ExactRational r(mpz_class(10), mpz_class(-4));
  EXPECT_EQ(r.numerator(), -5);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(ExactRational(mpz_class(0), mpz_class(-7)).to_string(), "0/1");
}

TEST(ExactRational, ZeroDenominatorRejected) {
  EXPECT_THROW(ExactRational(mpz_class(1), mpz_class(0)), std::domain_error);
  EXPECT_THROW(ExactRational(1) / ExactRational(0), std::domain_error);
}

TEST(ExactRational, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(ExactRational::parse("-691/2730"), ExactRational(mpz_class(-691), mpz_class(2730)));
  EXPECT_EQ(ExactRational::parse("6/4"), ExactRational(mpz_class(3), mpz_class(2)));
  EXPECT_EQ(ExactRational::parse("7"), ExactRational(7));
  EXPECT_THROW(ExactRational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse("3/"), std::invalid_argument);
}

TEST(ExactRational, ToStringParseRoundTrip) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    mpz_class num(static_cast<long>(rng() % 2000001) - 1000000);
    num *= mpz_class(static_cast<unsigned long>(rng()));
    mpz_class den(static_cast<unsigned long>(rng() % 100000 + 1));
    const ExactRational r(num, den);
    EXPECT_EQ(ExactRational::parse(r.to_string()), r);
    EXPECT_EQ(gcd(r.numerator(), r.denominator()), 1);
    EXPECT_GT(r.denominator(), 0);
  }
}

TEST(DecimalLength, CountsDigits) {
  EXPECT_EQ(decimal_length(mpz_class(0)), 1u);
  EXPECT_EQ(decimal_length(mpz_class(9)), 1u);
  EXPECT_EQ(decimal_length(mpz_class(10)), 2u);
  EXPECT_EQ(decimal_length(mpz_class(-999)), 3u);
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 500);
  EXPECT_EQ(decimal_length(big), 501u);
  EXPECT_EQ(decimal_length(mpz_class(big - 1)), 500u);
}

}  // namespace
}  // namespace bern

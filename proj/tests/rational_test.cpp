#include <gtest/gtest.h>

#include "bellpoly/errors.hpp"
#include "bellpoly/rational.hpp"
#include "support/oracles.hpp"

namespace bellpoly {
namespace {

TEST(RationalTest, StoredInLowestTermsWithPositiveDenominator) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(BigInt(8), BigInt(4)).to_string(), "2");
}

TEST(RationalTest, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("1/2"), Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(BigInt(-2), BigInt(3)));
  EXPECT_EQ(Rational::parse("17"), Rational(17));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
}

TEST(RationalTest, ParseRejectsNonRationalText) {
  for (const char* bad : {"1.5", "", "/2", "1/", "1/0", " 1", "1 /2", "--1", "+1", "1/-2", "abc", "1e3"}) {
    try {
      Rational::parse(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(RationalTest, DivisionByZeroIsADomainError) {
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), Error);
}

TEST(RationalTest, FieldAxiomsOnRandomTriples) {
  testing::RandomRationals gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = gen.next(50, 30);
    const Rational b = gen.next(50, 30);
    const Rational c = gen.next(50, 30);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) EXPECT_EQ(a * (Rational(1) / a), Rational(1));
  }
}

TEST(RationalTest, PowerAndExactRoot) {
  EXPECT_EQ(pow(Rational(BigInt(2), BigInt(3)), 3), Rational(BigInt(8), BigInt(27)));
  EXPECT_EQ(pow(Rational(BigInt(2), BigInt(3)), -2), Rational(BigInt(9), BigInt(4)));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(exact_root(Rational(BigInt(8), BigInt(27)), 3), Rational(BigInt(2), BigInt(3)));
  EXPECT_EQ(exact_root(Rational(-8), 3), Rational(-2));
  EXPECT_EQ(exact_root(Rational(BigInt(4), BigInt(9)), 2), Rational(BigInt(2), BigInt(3)));
  EXPECT_FALSE(exact_root(Rational(2), 2).has_value());
  EXPECT_FALSE(exact_root(Rational(-4), 2).has_value());
  EXPECT_FALSE(exact_root(Rational(BigInt(1), BigInt(2)), 3).has_value());
}

TEST(ScalarFunctionsTest, Factorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(ScalarFunctionsTest, FallingFactorial) {
  EXPECT_EQ(falling_factorial(7, 0), 1);
  EXPECT_EQ(falling_factorial(5, 2), 20);
  EXPECT_EQ(falling_factorial(6, 6), 720);
  EXPECT_THROW(falling_factorial(3, 4), Error);
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      EXPECT_EQ(falling_factorial(n, k) * factorial(n - k), factorial(n));
    }
  }
}

TEST(ScalarFunctionsTest, BinomialInt) {
  EXPECT_EQ(binomial_int(4, 2), 6);
  EXPECT_EQ(binomial_int(9, 0), 1);
  EXPECT_EQ(binomial_int(3, 5), 0);
}

TEST(ScalarFunctionsTest, GeneralizedBinomial) {
  EXPECT_EQ(binomial_rational(Rational(BigInt(1), BigInt(2)), 2), Rational(BigInt(-1), BigInt(8)));
  EXPECT_EQ(binomial_rational(Rational(BigInt(-7), BigInt(3)), 0), Rational(1));
  EXPECT_EQ(binomial_rational(Rational(BigInt(1), BigInt(3)), 1), Rational(BigInt(1), BigInt(3)));
  for (std::int64_t m = 0; m <= 20; ++m) {
    for (std::uint64_t k = 0; k <= 20; ++k) {
      EXPECT_EQ(binomial_rational(Rational(m), k), Rational(binomial_int(static_cast<std::uint64_t>(m), k)))
          << m << " choose " << k;
    }
  }
}

}  // namespace
}  // namespace bellpoly

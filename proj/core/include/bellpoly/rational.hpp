#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace bellpoly {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p" or "p/q" with an optional leading '-'. Decimal points,
  /// whitespace and zero denominators are rejected with ErrorCode::ParseError.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^exponent; a negative exponent requires a nonzero base.
Rational pow(const Rational& base, std::int64_t exponent);

/// The real k-th root of r if it is rational, otherwise nullopt. For even k the
/// non-negative root is returned; negative r with even k has no real root.
std::optional<Rational> exact_root(const Rational& r, unsigned k);

BigInt factorial(std::uint64_t n);

/// n (n-1) ... (n-k+1). Throws ErrorCode::DomainError when k > n.
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);

/// C(n, k), zero when k > n.
BigInt binomial_int(std::uint64_t n, std::uint64_t k);

/// Generalized binomial alpha (alpha-1) ... (alpha-k+1) / k!.
Rational binomial_rational(const Rational& alpha, std::uint64_t k);

}  // namespace bellpoly

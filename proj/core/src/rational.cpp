#include "bellpoly/rational.hpp"

#include <cctype>
#include <utility>

#include "bellpoly/errors.hpp"

namespace bellpoly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

static_assert(sizeof(long) >= sizeof(std::int64_t), "LP64 data model expected");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::DomainError, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DomainError, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorCode::DomainError, "zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::optional<Rational> exact_root(const Rational& r, unsigned k) {
  if (k == 0) throw Error(ErrorCode::DomainError, "zeroth root");
  if (r.is_zero()) return Rational(0);
  BigInt num = r.numerator();
  const bool negative = num < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  if (negative) num = -num;

  BigInt num_root;
  BigInt den_root;
  if (mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), r.denominator().get_mpz_t(), k) == 0) return std::nullopt;
  if (negative) num_root = -num_root;
  return Rational(num_root, den_root);
}

BigInt factorial(std::uint64_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw Error(ErrorCode::DomainError, "falling factorial with k > n");
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) result *= static_cast<unsigned long>(n - i);
  return result;
}

BigInt binomial_int(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Rational binomial_rational(const Rational& alpha, std::uint64_t k) {
  Rational product(1);
  for (std::uint64_t i = 0; i < k; ++i) {
    product *= alpha - Rational(static_cast<std::int64_t>(i));
  }
  return product / Rational(factorial(k));
}

}  // namespace bellpoly

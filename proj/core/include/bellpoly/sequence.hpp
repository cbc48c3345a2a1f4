#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "bellpoly/rational.hpp"

namespace bellpoly {

/// Right-hand sequence over the rationals: terms x_start, x_start+1, ... are
/// stored; every other index reads as zero.
class Sequence {
 public:
  Sequence() = default;
  Sequence(std::int64_t start, std::vector<Rational> terms)
      : start_(start), terms_(std::move(terms)) {}

  /// Kronecker delta at index 0.
  static Sequence delta() { return Sequence(0, {Rational(1)}); }

  /// f(start), ..., f(last).
  template <typename Fn>
  static Sequence generate(std::int64_t start, std::int64_t last, Fn&& fn) {
    std::vector<Rational> terms;
    for (std::int64_t i = start; i <= last; ++i) terms.push_back(fn(i));
    return Sequence(start, std::move(terms));
  }

  std::int64_t start() const { return start_; }
  /// Index of the last stored term; start() - 1 when nothing is stored.
  std::int64_t last() const { return start_ + static_cast<std::int64_t>(terms_.size()) - 1; }
  const std::vector<Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// x_n for any integer n.
  const Rational& at(std::int64_t n) const;
  const Rational& operator[](std::int64_t n) const { return at(n); }

  bool is_zero() const;

  /// Leading zeros stripped (start moves to the leading index). The zero
  /// sequence canonicalizes to an empty term list at its original start.
  Sequence canonicalized() const;

  /// Terms with index <= up_to only.
  Sequence truncated(std::int64_t up_to) const;

  /// Equal as functions on the integers; storage layout is ignored.
  friend bool operator==(const Sequence& a, const Sequence& b);

 private:
  std::int64_t start_ = 0;
  std::vector<Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Sequence& s);

/// (a * b)_n for n = a.start + b.start, ..., up_to.
Sequence convolve(const Sequence& a, const Sequence& b, std::int64_t up_to);

/// k-fold self convolution through index up_to, by repeated squaring.
Sequence conv_power(const Sequence& x, std::uint64_t k, std::int64_t up_to);

/// y_n = x_{n-d}.
Sequence shift(const Sequence& x, std::int64_t d);

/// Least n with x_n != 0, nullopt for the zero sequence.
std::optional<std::int64_t> leading_index(const Sequence& x);

}  // namespace bellpoly

#include "bellpoly/conv_calculus.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bellpoly/bell_basic.hpp"
#include "bellpoly/bell_factorized.hpp"
#include "bellpoly/errors.hpp"

namespace bellpoly {

namespace {

std::size_t idx(std::int64_t i) { return static_cast<std::size_t>(i); }

Rational leading_root(const Rational& lead, std::uint64_t k) {
  auto root = exact_root(lead, static_cast<unsigned>(k));
  if (!root) {
    throw Error(ErrorCode::IrrationalLeadingRoot,
                "leading term " + lead.to_string() + " has no rational " + std::to_string(k) + "-th root");
  }
  return *root;
}

// w_i = y_{i+k} for i >= 1, through i = up_to - 1.
Sequence shifted_tail(const Sequence& y, std::int64_t k, std::int64_t up_to) {
  if (up_to < 2) return Sequence(1, {});
  return Sequence::generate(1, up_to - 1, [&](std::int64_t i) { return y.at(i + k); });
}

Rational recover_x1(const Sequence& y, std::int64_t k, const std::optional<Rational>& x1) {
  if (y.at(k).is_zero()) {
    throw Error(ErrorCode::NonInvertible, "y_k = x_1^k vanishes, so x_1 = 0");
  }
  if (x1) {
    if (x1->is_zero()) throw Error(ErrorCode::NonInvertible, "x_1 = 0 is not invertible");
    return *x1;
  }
  return leading_root(y.at(k), static_cast<std::uint64_t>(k));
}

void check_inverse_window(const Sequence& y, std::int64_t k, std::int64_t up_to) {
  if (k < 1) throw Error(ErrorCode::DomainError, "inverse relation requires k >= 1");
  if (up_to < 1) throw Error(ErrorCode::DomainError, "inverse relation requires up_to >= 1");
  require_bell_argument(y);
  if (y.last() < up_to - 1 + k) {
    throw Error(ErrorCode::InsufficientData,
                "recovering x through index " + std::to_string(up_to) + " needs y through index " +
                    std::to_string(up_to - 1 + k) + ", got " + std::to_string(y.last()));
  }
}

}  // namespace

Sequence conv_power_via_bell(const Sequence& x, std::uint64_t k, std::int64_t up_to) {
  const auto power = static_cast<std::int64_t>(k);
  if (k == 0) return Sequence::delta();
  const auto n0 = leading_index(x);
  if (!n0) return Sequence(power * x.start(), {});

  const std::int64_t first = power * *n0;
  if (up_to < first) return Sequence(first, {});
  // y_i = x_{i-1+n0}, starting at index 1.
  const Sequence y = Sequence::generate(1, x.last() - *n0 + 1, [&](std::int64_t i) { return x.at(i - 1 + *n0); });
  const std::int64_t shift_by = power * (1 - *n0);
  const std::vector<Rational> column = bell_ord_column(y, power, up_to + shift_by);
  return Sequence::generate(first, up_to, [&](std::int64_t n) { return column[idx(n + shift_by)]; });
}

RootResult conv_root(const Sequence& x, std::uint64_t k, std::int64_t up_to) {
  if (k == 0) throw Error(ErrorCode::DomainError, "root order must be positive");
  const auto n0 = leading_index(x);
  if (!n0) throw Error(ErrorCode::DomainError, "the zero sequence has no distinguished root");
  const auto order = static_cast<std::int64_t>(k);
  if (*n0 % order != 0) {
    throw Error(ErrorCode::NoRoot, std::to_string(k) + " does not divide the leading index " + std::to_string(*n0));
  }
  const Rational lead = x.at(*n0);
  const Rational scale = leading_root(lead, k);

  const std::int64_t first = *n0 / order;
  RootResult result;
  result.k = k;
  result.sign_pair = k % 2 == 0;
  if (up_to < first) {
    result.root = Sequence(first, {});
    return result;
  }

  const std::int64_t depth = up_to - first;
  const Sequence y = Sequence::generate(1, std::max<std::int64_t>(depth, 0),
                                        [&](std::int64_t i) { return x.at(i + *n0) / lead; });
  const BellTable table = bell_ord_table(y, depth);
  const Rational inv_k(BigInt(1), BigInt(static_cast<unsigned long>(k)));
  std::vector<Rational> coeff;
  for (std::int64_t j = 0; j <= depth; ++j) coeff.push_back(binomial_rational(inv_k, static_cast<std::uint64_t>(j)));

  result.root = Sequence::generate(first, up_to, [&](std::int64_t n) {
    const std::int64_t m = n - first;
    Rational acc(0);
    for (std::int64_t j = 0; j <= m; ++j) acc += coeff[idx(j)] * table[idx(j)][idx(m)];
    return scale * acc;
  });
  return result;
}

Sequence invert_bell_ordinary(const Sequence& y, std::int64_t k, std::int64_t up_to,
                              std::optional<Rational> x1) {
  check_inverse_window(y, k, up_to);
  const Rational first = recover_x1(y, k, x1);
  const Sequence w = shifted_tail(y, k, up_to);
  const BellTable table = bell_ord_table(w, up_to - 1);
  const Rational inv_k(BigInt(1), BigInt(static_cast<unsigned long>(k)));

  return Sequence::generate(1, up_to, [&](std::int64_t n) {
    Rational acc(0);
    for (std::int64_t j = 0; j <= n - 1; ++j) {
      acc += binomial_rational(inv_k, static_cast<std::uint64_t>(j)) * pow(first, 1 - k * j) *
             table[idx(j)][idx(n - 1)];
    }
    return acc;
  });
}

Sequence invert_bell_exponential(const Sequence& y, std::int64_t k, std::int64_t up_to,
                                 std::optional<Rational> x1) {
  check_inverse_window(y, k, up_to);
  const Rational first = recover_x1(y, k, x1);
  const Sequence w = up_to < 2 ? Sequence(1, {})
                               : Sequence::generate(1, up_to - 1, [&](std::int64_t i) {
                                   return y.at(i + k) /
                                          Rational(binomial_int(static_cast<std::uint64_t>(i + k),
                                                                static_cast<std::uint64_t>(k)));
                                 });
  const BellTable table = bell_exp_table(w, up_to - 1);
  const Rational inv_k(BigInt(1), BigInt(static_cast<unsigned long>(k)));

  return Sequence::generate(1, up_to, [&](std::int64_t n) {
    Rational acc(0);
    for (std::int64_t j = 0; j <= n - 1; ++j) {
      acc += binomial_rational(inv_k, static_cast<std::uint64_t>(j)) * pow(first, 1 - k * j) *
             Rational(factorial(static_cast<std::uint64_t>(j))) * Rational(n) * table[idx(j)][idx(n - 1)];
    }
    return acc;
  });
}

Rational nested_ratio_check(const Sequence& x, std::int64_t n, std::int64_t k1, std::int64_t k2) {
  if (n < 1 || k1 < 1 || k2 < 1) throw Error(ErrorCode::DomainError, "nested ratio requires n, k1, k2 >= 1");
  require_bell_argument(x);
  const Sequence y1 = Sequence::generate(1, n, [&](std::int64_t m) { return bell_exp_recurrence(x, m, k1).value; });
  const Sequence y2 = Sequence::generate(1, n, [&](std::int64_t m) { return bell_exp_recurrence(x, m, k2).value; });
  const Rational denominator = bell_exp_recurrence(y1, n, k2).value;
  if (denominator.is_zero()) {
    throw Error(ErrorCode::Degenerate, "B_{n,k2}(y') vanishes");
  }
  return bell_exp_recurrence(y2, n, k1).value / denominator;
}

Rational compound_distribution(const Sequence& p, std::int64_t k, std::int64_t n) {
  if (k < 1) throw Error(ErrorCode::DomainError, "compound distribution requires k >= 1");
  Rational total(0);
  for (std::int64_t i = p.start(); i <= p.last(); ++i) {
    const Rational& pi = p.at(i);
    if (pi.sign() < 0) throw Error(ErrorCode::InvalidDistribution, "negative probability at index " + std::to_string(i));
    if (i < 1 && !pi.is_zero()) {
      throw Error(ErrorCode::InvalidDistribution, "probability mass at index " + std::to_string(i) + " < 1");
    }
    total += pi;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::InvalidDistribution, "probabilities sum to " + total.to_string());
  }
  if (n < k) return Rational(0);
  return compute_bell(p, n, k, Flavor::Ordinary).value;
}

}  // namespace bellpoly

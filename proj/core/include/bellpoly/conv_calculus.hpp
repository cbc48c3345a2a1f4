#pragma once

#include <cstdint>
#include <optional>

#include "bellpoly/rational.hpp"
#include "bellpoly/sequence.hpp"

namespace bellpoly {

/// x^{*k} through up_to as x^{*k}_n = B^_{n + k(1 - n0), k}(y), y_i = x_{i-1+n0},
/// where n0 is the leading index of x.
Sequence conv_power_via_bell(const Sequence& x, std::uint64_t k, std::int64_t up_to);

struct RootResult {
  Sequence root;
  std::uint64_t k = 1;
  bool sign_pair = false;  // k even: the negated root is a solution as well
};

/// Convolution root through up_to:
///   x^{*1/k}_n = x_{n0}^{1/k} sum_j C(1/k, j) B^_{n - n0/k, j}(y), y_i = x_{i+n0} / x_{n0}.
/// Throws NoRoot when k does not divide the leading index n0, and
/// IrrationalLeadingRoot when x_{n0} has no rational k-th root (or no real one).
/// For even k the root with positive leading term is returned.
RootResult conv_root(const Sequence& x, std::uint64_t k, std::int64_t up_to);

/// Recovers x_1, ..., x_{up_to} from y_n = B^_{n,k}(x). y must be stored
/// through index up_to - 1 + k (InsufficientData otherwise). x_1 defaults to
/// the rational k-th root of y_k (positive branch for even k).
Sequence invert_bell_ordinary(const Sequence& y, std::int64_t k, std::int64_t up_to,
                              std::optional<Rational> x1 = std::nullopt);

/// Same for y_n = B_{n,k}(x).
Sequence invert_bell_exponential(const Sequence& y, std::int64_t k, std::int64_t up_to,
                                 std::optional<Rational> x1 = std::nullopt);

/// B_{n,k1}(y'') / B_{n,k2}(y') with y'_m = B_{m,k1}(x), y''_m = B_{m,k2}(x).
/// The ratio is (k1!)^{k2-1} / (k2!)^{k1-1} for every x. Throws Degenerate
/// when the denominator vanishes.
Rational nested_ratio_check(const Sequence& x, std::int64_t n, std::int64_t k1, std::int64_t k2);

/// P(S_k = n) for S_k a sum of k i.i.d. draws from p (support >= 1), i.e.
/// B^_{n,k}(p), computed through the selected Bell algorithm. Throws
/// InvalidDistribution unless p is non-negative, sums to 1 and has no mass
/// below index 1.
Rational compound_distribution(const Sequence& p, std::int64_t k, std::int64_t n);

}  // namespace bellpoly

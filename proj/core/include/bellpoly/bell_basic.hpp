#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bellpoly/cost_model.hpp"
#include "bellpoly/rational.hpp"
#include "bellpoly/sequence.hpp"

namespace bellpoly {

enum class Flavor { Exponential, Ordinary };

enum class Algorithm {
  BruteForce,
  ExponentialRecurrence,
  OrdinaryRecurrence,
  Alg91,  // ordinary recurrence plus factorial conversion
  Alg92,  // nested recurrences over a factorization of k
  GenAl,  // nested recurrences after removing leading zero samples
};

std::string_view algorithm_name(Algorithm a) noexcept;

struct BellResult {
  Rational value;
  std::int64_t n = 0;
  std::int64_t k = 0;
  Flavor flavor = Flavor::Exponential;
  Algorithm algorithm = Algorithm::ExponentialRecurrence;
  std::optional<CostReport> cost;
};

/// Throws ErrorCode::DomainError if x has a nonzero term at an index below 1.
void require_bell_argument(const Sequence& x);

/// Direct sum over all (j_1, ..., j_n) with sum j_i = k and sum i j_i = n.
/// Exponential in n; intended as a reference for small n.
Rational bell_exp_bruteforce(const Sequence& x, std::int64_t n, std::int64_t k);

/// B_{n,k}(x) by the binomial-weighted recurrence in k.
BellResult bell_exp_recurrence(const Sequence& x, std::int64_t n, std::int64_t k);

/// Ordinary B^_{n,k}(x) = sum_j x_j B^_{n-j,k-1}(x), B^_{n,0} = delta_n.
BellResult bell_ord_recurrence(const Sequence& x, std::int64_t n, std::int64_t k);

/// (n!/k!) bhat: the exponential value from the ordinary one on x_i / i!.
Rational convert_ord_to_exp(const Rational& bhat, std::int64_t n, std::int64_t k);

/// y_i = x_i / i! over the stored window of x (indices >= 1).
Sequence convert_exp_arg(const Sequence& x);

/// y_i = i! x_i, the inverse of convert_exp_arg.
Sequence convert_ord_arg(const Sequence& x);

/// Exponential value via the ordinary recurrence on x_i / i!. With a counter,
/// the measured cost is exactly cost_q(n, k). Requires n >= k >= 1.
BellResult bell_exp_alg91(const Sequence& x, std::int64_t n, std::int64_t k,
                          OpCounter* counter = nullptr);

/// B^_{m,k}(x) for m = 0, ..., m_max.
std::vector<Rational> bell_ord_column(const Sequence& x, std::int64_t k, std::int64_t m_max);

/// table[j][m] = B^_{m,j}(x) (ordinary) or B_{m,j}(x) (exponential) for
/// 0 <= j, m <= m_max.
using BellTable = std::vector<std::vector<Rational>>;
BellTable bell_ord_table(const Sequence& x, std::int64_t m_max);
BellTable bell_exp_table(const Sequence& x, std::int64_t m_max);

}  // namespace bellpoly

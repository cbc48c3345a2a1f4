#pragma once

#include <cstdint>
#include <optional>

#include "bellpoly/bell_basic.hpp"
#include "bellpoly/cost_model.hpp"
#include "bellpoly/factorization.hpp"
#include "bellpoly/sequence.hpp"

namespace bellpoly {

/// B_{n,k}(x) by nested ordinary recurrences, one stage per factor of k, from
/// the smallest factor to the largest. A single buffer of samples is
/// overwritten by each stage. With a counter, the measured cost is exactly
/// cost_qprime(n, k, f). Prime k (sigma = 1) runs bell_exp_alg91.
/// Requires n >= k >= 2 and f.k() == k.
BellResult bell_exp_alg92(const Sequence& x, std::int64_t n, std::int64_t k, const Factorization& f,
                          OpCounter* counter = nullptr);

/// Number of leading zero samples: the n0 with x_i = 0 for i <= n0 and
/// x_{n0+1} != 0; nullopt for the zero sequence.
std::optional<std::int64_t> leading_zero_count(const Sequence& x);

/// Nested algorithm applied to the index-reduced polynomial
/// B_{n,k}(x) = (n)_{k n0} B_{n - k n0, k}(y), y_i = x_{i+n0} / (i+n0)_{n0}.
/// n0 is detected from x unless given; a given n0 must satisfy x_i = 0 for
/// i <= n0. When n - k n0 < k the value is 0 and nothing is computed.
/// Measured cost is exactly cost_qprime_n0. Requires n >= k >= 1.
BellResult bell_exp_genal(const Sequence& x, std::int64_t n, std::int64_t k,
                          OpCounter* counter = nullptr,
                          std::optional<std::int64_t> n0_override = std::nullopt);

struct AlgorithmChoice {
  Algorithm tag = Algorithm::Alg91;
  std::optional<Factorization> factorization;
  std::int64_t n0 = 0;
  BigInt predicted_cost;
  BigInt alg91_cost;  // Q(n, k), for comparison
};

/// Cheapest of Algorithm 91 (cost Q) and the factorized path (cost Q'_{n0});
/// ties go to Algorithm 91, k = 1 always uses it. The factorized path is
/// tagged Alg92 when n0 = 0 and GenAl otherwise.
AlgorithmChoice select_algorithm(std::int64_t n, std::int64_t k, std::int64_t n0);

enum class AlgorithmRequest { Auto, Recurrence, Alg91, Alg92, GenAl };

/// Front door used by the CLI and the compound distribution: handles the
/// trivial cases (k = 0, n < k, zero argument), the ordinary flavor through
/// y_i = i! x_i, and dispatches to the requested algorithm.
BellResult compute_bell(const Sequence& x, std::int64_t n, std::int64_t k, Flavor flavor,
                        AlgorithmRequest request = AlgorithmRequest::Auto,
                        OpCounter* counter = nullptr);

}  // namespace bellpoly

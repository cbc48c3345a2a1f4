#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bellpoly/factorization.hpp"
#include "bellpoly/rational.hpp"

namespace bellpoly {

/**
 * Basic-operation accounting.
 *
 * One unit is one addition, subtraction, multiplication or division. The
 * instrumented algorithms charge:
 *
 *  - each inner recurrence sum of m terms: m products and m - 1 additions,
 *    i.e. 2m - 1, including products against zero samples;
 *  - the factorial table 2!, 3!, ..., L! built by successive products: L - 1,
 *    where L is the largest factorial the conversion or final step reads
 *    (n for the plain algorithms, max(n - k n0, n0 + N) for the break-down
 *    variant with N converted samples);
 *  - one division per converted sample y_i = x_i / i!;
 *  - the final rescaling by the factorial ratio: one product and one division;
 *  - for the nested algorithm, the partial sums r_j of the factor list: one
 *    addition per stage after the first (sigma - 1 in total).
 *
 * The totals are 2n - k + 2 outside the recurrence for the plain algorithm and
 * 2n + 2 sigma - sum(p) for the nested one, so counts equal Q, Q' and Q'_{n0}.
 * The break-down prefactor (n)_{k n0} is an integer constant and is applied
 * without charge (the n0 cost model accounts the reduced-index evaluation only).
 */
class OpCounter {
 public:
  void add(std::uint64_t ops = 1) { count_ += ops; }
  std::uint64_t count() const { return count_; }
  void reset() { count_ = 0; }

 private:
  std::uint64_t count_ = 0;
};

/// Adds to an optional counter.
inline void charge(OpCounter* counter, std::uint64_t ops = 1) {
  if (counter != nullptr) counter->add(ops);
}

struct CostReport {
  BigInt predicted;
  std::optional<std::uint64_t> measured;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t n0 = 0;
  std::optional<Factorization> factorization;

  /// True when no measurement was taken or it matches the prediction.
  bool consistent() const { return !measured || predicted == static_cast<unsigned long>(*measured); }
};

/// Q(n,k) = k n^2 + 2(-k^2 + k + 1) n + k^3 - 2k^2 + 2, operations of the plain
/// ordinary-recurrence algorithm.
BigInt cost_q(std::int64_t n, std::int64_t k);

struct QuadraticCost {
  BigInt a;
  BigInt b;
  BigInt c;
  BigInt at(std::int64_t n) const;
};

/// Coefficients of Q'(n) for the nested algorithm applying factors in the
/// given order (first entry is p_1, the stage run last).
QuadraticCost qprime_coefficients(std::span<const std::int64_t> ordered_factors);

BigInt cost_qprime(std::int64_t n, std::int64_t k, const Factorization& f);
BigInt cost_qprime(std::int64_t n, std::span<const std::int64_t> ordered_factors);

/// Q'(n - k n0, k) + max{0, n0 + sigma - sum(p)}.
BigInt cost_qprime_n0(std::int64_t n, std::int64_t k, const Factorization& f, std::int64_t n0);

/// Same for an arbitrary factor list (k is its product; factors of 1 allowed).
BigInt cost_qprime_n0(std::int64_t n, std::span<const std::int64_t> ordered_factors, std::int64_t n0);

/// 100 (Q - Q'_{n0}) / Q with the prime factorization of k. Prime k yields 0
/// at n0 = 0 since both polynomials coincide.
Rational savings(std::int64_t n, std::int64_t k, std::int64_t n0);

/// (1 - sum(p) / prod(p)) * 100.
Rational savings_limit(std::int64_t k);

/// One decimal, rounded half up: 22.49999 -> "22.5", 12.87 -> "12.9".
std::string format_percent(const Rational& percent);

struct OrderingDelta {
  BigInt closed_form;    // (p_i - p_{i+1})(2n + p_i p_{i+1} - 2p_i - 2p_{i+1} + 2u + 3)
  BigInt by_difference;  // Q'(swapped) - Q'(given)
  BigInt lower_bound;    // (p_i - p_{i+1})(2(n-k) + p_i p_{i+1} + 2(sigma-2) + 3)
};

/// Cost change from swapping the factors at 0-based positions i and i+1.
/// Throws ErrorCode::DomainError on an invalid position, and when the closed
/// form and the polynomial difference disagree.
OrderingDelta ordering_cost_delta(std::int64_t n, std::span<const std::int64_t> ordered_factors,
                                  std::size_t i);

struct SavingsCell {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t n0 = 0;
  bool defined = false;     // false when the cell is blank (n < k, or n - k n0 < k)
  bool factorized = false;  // false when k is prime: no factorization gain
  BigInt q;
  BigInt qprime;
  Rational percent;
};

SavingsCell savings_cell(std::int64_t n, std::int64_t k, std::int64_t n0);

/// Row-major over ks, then ns.
std::vector<SavingsCell> table1(std::span<const std::int64_t> ns, std::span<const std::int64_t> ks,
                                std::int64_t n0 = 0);

/// n = k, ..., n_max for each n0, grouped by n0.
std::vector<SavingsCell> figure1_data(std::int64_t k, std::int64_t n_max,
                                      std::span<const std::int64_t> n0s);

/// Header "n,k,n0,Q,Qprime,e_percent", LF endings, blank fields for
/// undefined cells.
std::string savings_csv(std::span<const SavingsCell> cells);

}  // namespace bellpoly

#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace bellpoly {

/// k = p_1 p_2 ... p_sigma with every p_j >= 2, kept in descending order.
class Factorization {
 public:
  /// Sorts factors descending. Throws ErrorCode::DomainError when a factor is
  /// below 2 or the product differs from k.
  Factorization(std::int64_t k, std::vector<std::int64_t> factors);

  std::int64_t k() const { return k_; }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t sigma() const { return factors_.size(); }
  std::int64_t factor_sum() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::int64_t k_;
  std::vector<std::int64_t> factors_;
};

std::ostream& operator<<(std::ostream& os, const Factorization& f);

/// Prime factorization with multiplicity by trial division, descending.
/// Requires k >= 2.
Factorization factorize(std::int64_t k);

bool is_prime(std::int64_t k);

}  // namespace bellpoly

#include "bellpoly/factorization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "bellpoly/errors.hpp"

namespace bellpoly {

Factorization::Factorization(std::int64_t k, std::vector<std::int64_t> factors)
    : k_(k), factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::DomainError, "empty factorization");
  std::int64_t product = 1;
  for (std::int64_t p : factors_) {
    if (p < 2) throw Error(ErrorCode::DomainError, "factor below 2: " + std::to_string(p));
    if (product > k_ / p) throw Error(ErrorCode::DomainError, "factor product exceeds k");
    product *= p;
  }
  if (product != k_) {
    throw Error(ErrorCode::DomainError,
                "factor product " + std::to_string(product) + " differs from k = " + std::to_string(k_));
  }
  std::sort(factors_.begin(), factors_.end(), std::greater<>());
}

std::int64_t Factorization::factor_sum() const {
  return std::accumulate(factors_.begin(), factors_.end(), std::int64_t{0});
}

std::ostream& operator<<(std::ostream& os, const Factorization& f) {
  os << '(';
  for (std::size_t i = 0; i < f.factors().size(); ++i) {
    if (i != 0) os << ", ";
    os << f.factors()[i];
  }
  return os << ')';
}

Factorization factorize(std::int64_t k) {
  if (k < 2) throw Error(ErrorCode::DomainError, "factorize requires k >= 2");
  std::vector<std::int64_t> primes;
  std::int64_t rest = k;
  for (std::int64_t d = 2; d <= rest / d; ++d) {
    while (rest % d == 0) {
      primes.push_back(d);
      rest /= d;
    }
  }
  if (rest > 1) primes.push_back(rest);
  return Factorization(k, std::move(primes));
}

bool is_prime(std::int64_t k) { return k >= 2 && factorize(k).sigma() == 1; }

}  // namespace bellpoly

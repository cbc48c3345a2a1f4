#include "bellpoly/bell_factorized.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "bellpoly/errors.hpp"

namespace bellpoly {

namespace {

std::size_t idx(std::int64_t i) { return static_cast<std::size_t>(i); }

// Runs the nested stages on y[1..] (slot 0 unused) so that afterwards
// y[reduced_n] = B^_{reduced_n, prod(factors)}(y_in). `factors` is p_1 >= ...
// >= p_sigma; stage j uses p_{sigma-j+1}. Charges sigma - 1 for the partial
// sums r_j and 2m - 1 per inner sum of m terms.
void nested_stages(std::vector<Rational>& y, std::int64_t reduced_n,
                   std::span<const std::int64_t> factors, OpCounter* counter) {
  const auto sigma = static_cast<std::int64_t>(factors.size());

  // r[j] = p_1 + ... + p_{sigma-j+1}, built from r[sigma] = p_1 upwards.
  std::vector<std::int64_t> r(idx(sigma + 1), 0);
  r[idx(sigma)] = factors[0];
  for (std::int64_t j = sigma - 1; j >= 1; --j) {
    r[idx(j)] = r[idx(j + 1)] + factors[idx(sigma - j)];
    charge(counter);
  }

  std::vector<Rational> prev(idx(reduced_n + 1));
  std::vector<Rational> cur(idx(reduced_n + 1));
  for (std::int64_t j = 1; j <= sigma; ++j) {
    const std::int64_t p = factors[idx(sigma - j)];
    const std::int64_t span = reduced_n + sigma - j - r[idx(j)];  // i runs l..l+span

    prev[0] = Rational(1);
    for (std::int64_t i = 1; i <= span; ++i) prev[idx(i)] = Rational(0);

    for (std::int64_t l = 1; l <= p; ++l) {
      for (std::int64_t i = l; i <= l + span; ++i) {
        Rational acc = y[1] * prev[idx(i - 1)];
        charge(counter);
        for (std::int64_t m = 2; m <= i - l + 1; ++m) {
          acc += y[idx(m)] * prev[idx(i - m)];
          charge(counter, 2);
        }
        cur[idx(i)] = std::move(acc);
      }
      std::swap(prev, cur);
    }

    for (std::int64_t l = 1; l <= p - 1; ++l) y[idx(l)] = Rational(0);
    for (std::int64_t l = p; l <= p + span; ++l) y[idx(l)] = prev[idx(l)];
  }
}

// Factorial table 0!, ..., top! with top - 1 charged products.
std::vector<BigInt> factorial_table(std::int64_t top, OpCounter* counter) {
  std::vector<BigInt> fact(idx(std::max<std::int64_t>(top, 1) + 1), BigInt(1));
  for (std::int64_t i = 2; i <= top; ++i) {
    fact[idx(i)] = fact[idx(i - 1)] * static_cast<unsigned long>(i);
    charge(counter);
  }
  return fact;
}

std::int64_t sum_of(std::span<const std::int64_t> v) {
  std::int64_t s = 0;
  for (std::int64_t p : v) s += p;
  return s;
}

}  // namespace

BellResult bell_exp_alg92(const Sequence& x, std::int64_t n, std::int64_t k, const Factorization& f,
                          OpCounter* counter) {
  if (k < 2 || n < k) throw Error(ErrorCode::DomainError, "Algorithm 92 requires n >= k >= 2");
  if (f.k() != k) {
    throw Error(ErrorCode::DomainError, "factorization of " + std::to_string(f.k()) +
                                            " used for k = " + std::to_string(k));
  }
  if (f.sigma() == 1) return bell_exp_alg91(x, n, k, counter);
  require_bell_argument(x);
  const std::uint64_t before = counter != nullptr ? counter->count() : 0;

  const auto sigma = static_cast<std::int64_t>(f.sigma());
  const std::int64_t width = n + sigma - f.factor_sum();

  const std::vector<BigInt> fact = factorial_table(n, counter);
  std::vector<Rational> y(idx(std::max(width, n) + 1));
  for (std::int64_t i = 1; i <= width; ++i) {
    y[idx(i)] = x.at(i) / Rational(fact[idx(i)]);
    charge(counter);
  }

  nested_stages(y, n, f.factors(), counter);

  Rational value = y[idx(n)] * Rational(fact[idx(n)]);
  value /= Rational(fact[idx(k)]);
  charge(counter, 2);

  BellResult result{std::move(value), n, k, Flavor::Exponential, Algorithm::Alg92, {}};
  CostReport cost;
  cost.predicted = cost_qprime(n, k, f);
  if (counter != nullptr) cost.measured = counter->count() - before;
  cost.n = n;
  cost.k = k;
  cost.factorization = f;
  result.cost = std::move(cost);
  return result;
}

std::optional<std::int64_t> leading_zero_count(const Sequence& x) {
  const auto lead = leading_index(x);
  if (!lead) return std::nullopt;
  return std::max<std::int64_t>(*lead, 1) - 1;
}

BellResult bell_exp_genal(const Sequence& x, std::int64_t n, std::int64_t k, OpCounter* counter,
                          std::optional<std::int64_t> n0_override) {
  if (k < 1 || n < k) throw Error(ErrorCode::DomainError, "GenAl requires n >= k >= 1");
  require_bell_argument(x);
  const std::uint64_t before = counter != nullptr ? counter->count() : 0;

  const std::int64_t detected = leading_zero_count(x).value_or(n);
  std::int64_t n0 = detected;
  if (n0_override) {
    if (*n0_override < 0 || *n0_override > detected) {
      throw Error(ErrorCode::DomainError,
                  "n0 = " + std::to_string(*n0_override) + " but x has only " +
                      std::to_string(detected) + " leading zero samples");
    }
    n0 = *n0_override;
  }

  std::optional<Factorization> f;
  std::vector<std::int64_t> factors{1};
  if (k >= 2) {
    f = factorize(k);
    factors = f->factors();
  }

  BellResult result{Rational(0), n, k, Flavor::Exponential, Algorithm::GenAl, {}};
  CostReport cost;
  cost.n = n;
  cost.k = k;
  cost.n0 = n0;
  cost.factorization = f;

  const std::int64_t reduced_n = n - k * n0;
  if (reduced_n < k) {
    // Every block needs a part above n0: nothing to compute.
    cost.predicted = 0;
    if (counter != nullptr) cost.measured = 0;
    result.cost = std::move(cost);
    return result;
  }

  const auto sigma = static_cast<std::int64_t>(factors.size());
  const std::int64_t width = reduced_n + sigma - sum_of(factors);

  const std::vector<BigInt> fact = factorial_table(std::max(reduced_n, n0 + width), counter);
  std::vector<Rational> y(idx(std::max(width, reduced_n) + 1));
  for (std::int64_t i = 1; i <= width; ++i) {
    y[idx(i)] = x.at(i + n0) / Rational(fact[idx(i + n0)]);
    charge(counter);
  }

  nested_stages(y, reduced_n, factors, counter);

  Rational value = y[idx(reduced_n)] * Rational(fact[idx(reduced_n)]);
  value /= Rational(fact[idx(k)]);
  charge(counter, 2);
  // Break-down prefactor (n)_{k n0}, an integer constant outside the count.
  if (n0 > 0) {
    value *= Rational(falling_factorial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k * n0)));
  }

  result.value = std::move(value);
  cost.predicted = cost_qprime_n0(n, factors, n0);
  if (counter != nullptr) cost.measured = counter->count() - before;
  result.cost = std::move(cost);
  return result;
}

AlgorithmChoice select_algorithm(std::int64_t n, std::int64_t k, std::int64_t n0) {
  if (k < 1 || n < k) throw Error(ErrorCode::DomainError, "select_algorithm requires n >= k >= 1");
  if (n0 < 0) throw Error(ErrorCode::DomainError, "n0 must be non-negative");
  AlgorithmChoice choice;
  choice.n0 = n0;
  choice.alg91_cost = cost_q(n, k);
  choice.predicted_cost = choice.alg91_cost;
  if (k == 1) return choice;

  const Factorization f = factorize(k);
  if (n - k * n0 < k) {
    choice.tag = Algorithm::GenAl;
    choice.factorization = f;
    choice.predicted_cost = 0;
    return choice;
  }
  const BigInt factorized = cost_qprime_n0(n, k, f, n0);
  if (factorized < choice.alg91_cost) {
    choice.tag = n0 == 0 ? Algorithm::Alg92 : Algorithm::GenAl;
    choice.factorization = f;
    choice.predicted_cost = factorized;
  }
  return choice;
}

BellResult compute_bell(const Sequence& x, std::int64_t n, std::int64_t k, Flavor flavor,
                        AlgorithmRequest request, OpCounter* counter) {
  if (n < 0 || k < 0) throw Error(ErrorCode::DomainError, "Bell indices must be non-negative");
  require_bell_argument(x);

  if (flavor == Flavor::Ordinary) {
    // B^_{n,k}(x) = (k!/n!) B_{n,k}(y), y_i = i! x_i.
    BellResult r = compute_bell(convert_ord_arg(x.truncated(n)), n, k, Flavor::Exponential, request, counter);
    if (k <= n) {
      r.value /= Rational(falling_factorial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n - k)));
    }
    r.flavor = Flavor::Ordinary;
    return r;
  }

  if (k == 0 || n < k) {
    BellResult trivial{Rational(k == 0 && n == 0 ? 1 : 0), n, k, flavor, Algorithm::ExponentialRecurrence, {}};
    return trivial;
  }

  switch (request) {
    case AlgorithmRequest::Recurrence:
      return bell_exp_recurrence(x, n, k);
    case AlgorithmRequest::Alg91:
      return bell_exp_alg91(x, n, k, counter);
    case AlgorithmRequest::Alg92:
      if (k == 1) return bell_exp_alg91(x, n, k, counter);
      return bell_exp_alg92(x, n, k, factorize(k), counter);
    case AlgorithmRequest::GenAl:
      return bell_exp_genal(x, n, k, counter);
    case AlgorithmRequest::Auto:
      break;
  }

  const auto n0 = leading_zero_count(x.truncated(n));
  if (!n0) {
    BellResult zero{Rational(0), n, k, flavor, Algorithm::Alg91, {}};
    return zero;
  }
  const AlgorithmChoice choice = select_algorithm(n, k, *n0);
  switch (choice.tag) {
    case Algorithm::Alg92:
      return bell_exp_alg92(x, n, k, *choice.factorization, counter);
    case Algorithm::GenAl:
      return bell_exp_genal(x, n, k, counter, *n0);
    default:
      return bell_exp_alg91(x, n, k, counter);
  }
}

}  // namespace bellpoly

#include "bellpoly/bell_basic.hpp"

#include <string>

#include "bellpoly/errors.hpp"

namespace bellpoly {

namespace {

std::size_t idx(std::int64_t i) { return static_cast<std::size_t>(i); }

void require_indices(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw Error(ErrorCode::DomainError, "Bell indices must be non-negative");
}

// Enumerates multiplicities of part sizes from `part` down to 1.
void enumerate_partitions(const Sequence& x, std::int64_t part, std::int64_t parts_left,
                          std::int64_t sum_left, const Rational& weight, const BigInt& n_fact,
                          Rational& total) {
  if (part == 0) {
    if (parts_left == 0 && sum_left == 0) total += Rational(n_fact) * weight;
    return;
  }
  const Rational term = x.at(part) / Rational(factorial(static_cast<std::uint64_t>(part)));
  Rational w = weight;
  BigInt mult_fact = 1;
  for (std::int64_t j = 0; j <= parts_left && j * part <= sum_left; ++j) {
    if (j > 0) {
      w *= term;
      mult_fact *= static_cast<unsigned long>(j);
    }
    enumerate_partitions(x, part - 1, parts_left - j, sum_left - j * part, w / Rational(mult_fact),
                         n_fact, total);
  }
}

}  // namespace

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::BruteForce: return "BRUTE_FORCE";
    case Algorithm::ExponentialRecurrence: return "RECURRENCE";
    case Algorithm::OrdinaryRecurrence: return "ORDINARY_RECURRENCE";
    case Algorithm::Alg91: return "ALG91";
    case Algorithm::Alg92: return "ALG92";
    case Algorithm::GenAl: return "GENAL";
  }
  return "unknown";
}

void require_bell_argument(const Sequence& x) {
  for (std::int64_t i = x.start(); i <= x.last() && i < 1; ++i) {
    if (!x.at(i).is_zero()) {
      throw Error(ErrorCode::DomainError,
                  "Bell argument has a nonzero sample at index " + std::to_string(i));
    }
  }
}

Rational bell_exp_bruteforce(const Sequence& x, std::int64_t n, std::int64_t k) {
  require_indices(n, k);
  require_bell_argument(x);
  if (n == 0) return Rational(k == 0 ? 1 : 0);
  Rational total(0);
  enumerate_partitions(x, n, k, n, Rational(1), factorial(static_cast<std::uint64_t>(n)), total);
  return total;
}

BellResult bell_exp_recurrence(const Sequence& x, std::int64_t n, std::int64_t k) {
  require_indices(n, k);
  require_bell_argument(x);
  BellResult result{Rational(0), n, k, Flavor::Exponential, Algorithm::ExponentialRecurrence, {}};
  if (k == 0) {
    result.value = Rational(n == 0 ? 1 : 0);
    return result;
  }
  if (n < k) return result;

  // prev[m] = B_{m,l-1}; only rows l-1 and l are alive.
  std::vector<Rational> prev(idx(n + 1), Rational(0));
  prev[0] = Rational(1);
  std::vector<Rational> cur(idx(n + 1));
  for (std::int64_t l = 1; l <= k; ++l) {
    std::fill(cur.begin(), cur.end(), Rational(0));
    for (std::int64_t m = l; m <= n - k + l; ++m) {
      Rational acc(0);
      for (std::int64_t j = 1; j <= m - l + 1; ++j) {
        acc += Rational(binomial_int(static_cast<std::uint64_t>(m - 1), static_cast<std::uint64_t>(j - 1))) *
               x.at(j) * prev[idx(m - j)];
      }
      cur[idx(m)] = std::move(acc);
    }
    std::swap(prev, cur);
  }
  result.value = prev[idx(n)];
  return result;
}

BellResult bell_ord_recurrence(const Sequence& x, std::int64_t n, std::int64_t k) {
  require_indices(n, k);
  require_bell_argument(x);
  BellResult result{Rational(0), n, k, Flavor::Ordinary, Algorithm::OrdinaryRecurrence, {}};
  if (k == 0) {
    result.value = Rational(n == 0 ? 1 : 0);
    return result;
  }
  if (n < k) return result;

  std::vector<Rational> prev(idx(n + 1), Rational(0));
  prev[0] = Rational(1);
  std::vector<Rational> cur(idx(n + 1));
  for (std::int64_t l = 1; l <= k; ++l) {
    std::fill(cur.begin(), cur.end(), Rational(0));
    for (std::int64_t m = l; m <= n - k + l; ++m) {
      Rational acc(0);
      for (std::int64_t j = 1; j <= m - l + 1; ++j) acc += x.at(j) * prev[idx(m - j)];
      cur[idx(m)] = std::move(acc);
    }
    std::swap(prev, cur);
  }
  result.value = prev[idx(n)];
  return result;
}

Rational convert_ord_to_exp(const Rational& bhat, std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) throw Error(ErrorCode::DomainError, "conversion requires n >= k >= 0");
  return bhat * Rational(falling_factorial(static_cast<std::uint64_t>(n),
                                           static_cast<std::uint64_t>(n - k)));
}

Sequence convert_exp_arg(const Sequence& x) {
  require_bell_argument(x);
  if (x.last() < 1) return Sequence(1, {});
  return Sequence::generate(1, x.last(), [&](std::int64_t i) {
    return x.at(i) / Rational(factorial(static_cast<std::uint64_t>(i)));
  });
}

Sequence convert_ord_arg(const Sequence& x) {
  require_bell_argument(x);
  if (x.last() < 1) return Sequence(1, {});
  return Sequence::generate(1, x.last(), [&](std::int64_t i) {
    return x.at(i) * Rational(factorial(static_cast<std::uint64_t>(i)));
  });
}

BellResult bell_exp_alg91(const Sequence& x, std::int64_t n, std::int64_t k, OpCounter* counter) {
  if (k < 1 || n < k) throw Error(ErrorCode::DomainError, "Algorithm 91 requires n >= k >= 1");
  require_bell_argument(x);
  const std::uint64_t before = counter != nullptr ? counter->count() : 0;

  std::vector<BigInt> fact(idx(n + 1), BigInt(1));
  for (std::int64_t i = 2; i <= n; ++i) {
    fact[idx(i)] = fact[idx(i - 1)] * static_cast<unsigned long>(i);
    charge(counter);
  }

  const std::int64_t width = n - k + 1;
  std::vector<Rational> y(idx(width + 1));
  for (std::int64_t i = 1; i <= width; ++i) {
    y[idx(i)] = x.at(i) / Rational(fact[idx(i)]);
    charge(counter);
  }

  // Layer l holds B^_{i,l}(y) for i = l, ..., n-k+l at slot i.
  std::vector<Rational> prev(idx(n + 1), Rational(0));
  prev[0] = Rational(1);
  std::vector<Rational> cur(idx(n + 1), Rational(0));
  for (std::int64_t l = 1; l <= k; ++l) {
    for (std::int64_t i = l; i <= n - k + l; ++i) {
      Rational acc = y[1] * prev[idx(i - 1)];
      charge(counter);
      for (std::int64_t j = 2; j <= i - l + 1; ++j) {
        acc += y[idx(j)] * prev[idx(i - j)];
        charge(counter, 2);
      }
      cur[idx(i)] = std::move(acc);
    }
    std::swap(prev, cur);
  }

  Rational value = prev[idx(n)] * Rational(fact[idx(n)]);
  value /= Rational(fact[idx(k)]);
  charge(counter, 2);

  BellResult result{std::move(value), n, k, Flavor::Exponential, Algorithm::Alg91, {}};
  CostReport cost;
  cost.predicted = cost_q(n, k);
  if (counter != nullptr) cost.measured = counter->count() - before;
  cost.n = n;
  cost.k = k;
  result.cost = std::move(cost);
  return result;
}

std::vector<Rational> bell_ord_column(const Sequence& x, std::int64_t k, std::int64_t m_max) {
  if (k < 0) throw Error(ErrorCode::DomainError, "negative Bell index");
  require_bell_argument(x);
  std::vector<Rational> prev(idx(m_max + 1), Rational(0));
  if (m_max < 0) return prev;
  prev[0] = Rational(1);
  std::vector<Rational> cur(idx(m_max + 1));
  for (std::int64_t l = 1; l <= k; ++l) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
      Rational acc(0);
      for (std::int64_t j = 1; j <= m - l + 1; ++j) acc += x.at(j) * prev[idx(m - j)];
      cur[idx(m)] = std::move(acc);
    }
    std::swap(prev, cur);
  }
  return prev;
}

BellTable bell_ord_table(const Sequence& x, std::int64_t m_max) {
  require_bell_argument(x);
  BellTable table(idx(m_max + 1), std::vector<Rational>(idx(m_max + 1), Rational(0)));
  table[0][0] = Rational(1);
  for (std::int64_t j = 1; j <= m_max; ++j) {
    for (std::int64_t m = j; m <= m_max; ++m) {
      Rational acc(0);
      for (std::int64_t i = 1; i <= m - j + 1; ++i) acc += x.at(i) * table[idx(j - 1)][idx(m - i)];
      table[idx(j)][idx(m)] = std::move(acc);
    }
  }
  return table;
}

BellTable bell_exp_table(const Sequence& x, std::int64_t m_max) {
  require_bell_argument(x);
  BellTable table(idx(m_max + 1), std::vector<Rational>(idx(m_max + 1), Rational(0)));
  table[0][0] = Rational(1);
  for (std::int64_t j = 1; j <= m_max; ++j) {
    for (std::int64_t m = j; m <= m_max; ++m) {
      Rational acc(0);
      for (std::int64_t i = 1; i <= m - j + 1; ++i) {
        acc += Rational(binomial_int(static_cast<std::uint64_t>(m - 1), static_cast<std::uint64_t>(i - 1))) *
               x.at(i) * table[idx(j - 1)][idx(m - i)];
      }
      table[idx(j)][idx(m)] = std::move(acc);
    }
  }
  return table;
}

}  // namespace bellpoly

#include "bellpoly/cost_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bellpoly/errors.hpp"

namespace bellpoly {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

BigInt cost_q(std::int64_t n, std::int64_t k) {
  const BigInt N = big(n);
  const BigInt K = big(k);
  return K * N * N + 2 * (-K * K + K + 1) * N + K * K * K - 2 * K * K + 2;
}

BigInt QuadraticCost::at(std::int64_t n) const {
  const BigInt N = big(n);
  return a * N * N + b * N + c;
}

QuadraticCost qprime_coefficients(std::span<const std::int64_t> ordered_factors) {
  QuadraticCost cost{0, 2, 0};
  BigInt prefix = 0;
  std::int64_t j = 0;
  for (std::int64_t p : ordered_factors) {
    ++j;
    prefix += big(p);
    const BigInt lead = big(j) - prefix;
    cost.a += big(p);
    cost.b += 2 * lead * big(p);
    cost.c += lead * lead * big(p);
  }
  cost.c += -cost.a + 2 * big(static_cast<std::int64_t>(ordered_factors.size()));
  return cost;
}

BigInt cost_qprime(std::int64_t n, std::span<const std::int64_t> ordered_factors) {
  return qprime_coefficients(ordered_factors).at(n);
}

BigInt cost_qprime(std::int64_t n, std::int64_t k, const Factorization& f) {
  if (f.k() != k) throw Error(ErrorCode::DomainError, "factorization does not belong to k");
  return cost_qprime(n, f.factors());
}

BigInt cost_qprime_n0(std::int64_t n, std::span<const std::int64_t> ordered_factors, std::int64_t n0) {
  if (n0 < 0) throw Error(ErrorCode::DomainError, "n0 must be non-negative");
  std::int64_t k = 1;
  std::int64_t sum = 0;
  for (std::int64_t p : ordered_factors) {
    k *= p;
    sum += p;
  }
  const std::int64_t extra =
      std::max<std::int64_t>(0, n0 + static_cast<std::int64_t>(ordered_factors.size()) - sum);
  return cost_qprime(n - k * n0, ordered_factors) + big(extra);
}

BigInt cost_qprime_n0(std::int64_t n, std::int64_t k, const Factorization& f, std::int64_t n0) {
  if (f.k() != k) throw Error(ErrorCode::DomainError, "factorization does not belong to k");
  return cost_qprime_n0(n, f.factors(), n0);
}

SavingsCell savings_cell(std::int64_t n, std::int64_t k, std::int64_t n0) {
  SavingsCell cell;
  cell.n = n;
  cell.k = k;
  cell.n0 = n0;
  if (k < 2) throw Error(ErrorCode::DomainError, "savings requires k >= 2");
  const Factorization f = factorize(k);
  cell.factorized = f.sigma() > 1;
  if (n < k || n - k * n0 < k) return cell;
  cell.defined = true;
  cell.q = cost_q(n, k);
  cell.qprime = cost_qprime_n0(n, k, f, n0);
  cell.percent = Rational(100 * (cell.q - cell.qprime), cell.q);
  return cell;
}

Rational savings(std::int64_t n, std::int64_t k, std::int64_t n0) {
  const SavingsCell cell = savings_cell(n, k, n0);
  if (!cell.defined) {
    throw Error(ErrorCode::DomainError, "savings requires n - k n0 >= k");
  }
  return cell.percent;
}

Rational savings_limit(std::int64_t k) {
  const Factorization f = factorize(k);
  return Rational(100) * (Rational(1) - Rational(big(f.factor_sum()), big(k)));
}

std::string format_percent(const Rational& percent) {
  // floor(10 x + 1/2)
  const Rational scaled = percent * Rational(10) + Rational(BigInt(1), BigInt(2));
  const BigInt tenths = floor_div(scaled.numerator(), scaled.denominator());
  BigInt magnitude = abs(tenths);
  BigInt whole = magnitude / 10;
  BigInt frac = magnitude % 10;
  return (tenths < 0 ? "-" : "") + whole.get_str() + "." + frac.get_str();
}

OrderingDelta ordering_cost_delta(std::int64_t n, std::span<const std::int64_t> ordered_factors,
                                  std::size_t i) {
  if (i + 1 >= ordered_factors.size()) {
    throw Error(ErrorCode::DomainError, "no adjacent factor pair at this position");
  }
  std::vector<std::int64_t> swapped(ordered_factors.begin(), ordered_factors.end());
  std::swap(swapped[i], swapped[i + 1]);

  const BigInt pi = big(ordered_factors[i]);
  const BigInt pj = big(ordered_factors[i + 1]);
  // u = i - 1 - sum_{j < i} p_j with 1-based i, i.e. (0-based i) - prefix sum.
  const std::int64_t prefix =
      std::accumulate(ordered_factors.begin(), ordered_factors.begin() + static_cast<std::ptrdiff_t>(i),
                      std::int64_t{0});
  const BigInt u = big(static_cast<std::int64_t>(i)) - big(prefix);
  const BigInt k = std::accumulate(ordered_factors.begin(), ordered_factors.end(), BigInt(1),
                                   [](const BigInt& acc, std::int64_t p) { return acc * big(p); });
  const BigInt sigma = big(static_cast<std::int64_t>(ordered_factors.size()));
  const BigInt N = big(n);

  OrderingDelta delta;
  delta.closed_form = (pi - pj) * (2 * N + pi * pj - 2 * pi - 2 * pj + 2 * u + 3);
  delta.by_difference = cost_qprime(n, swapped) - cost_qprime(n, ordered_factors);
  delta.lower_bound = (pi - pj) * (2 * (N - k) + pi * pj + 2 * (sigma - 2) + 3);
  if (delta.closed_form != delta.by_difference) {
    throw Error(ErrorCode::DomainError, "closed-form ordering delta disagrees with the cost polynomial");
  }
  return delta;
}

std::vector<SavingsCell> table1(std::span<const std::int64_t> ns, std::span<const std::int64_t> ks,
                                std::int64_t n0) {
  std::vector<SavingsCell> cells;
  cells.reserve(ns.size() * ks.size());
  for (std::int64_t k : ks) {
    for (std::int64_t n : ns) cells.push_back(savings_cell(n, k, n0));
  }
  return cells;
}

std::vector<SavingsCell> figure1_data(std::int64_t k, std::int64_t n_max,
                                      std::span<const std::int64_t> n0s) {
  std::vector<SavingsCell> cells;
  for (std::int64_t n0 : n0s) {
    for (std::int64_t n = k; n <= n_max; ++n) cells.push_back(savings_cell(n, k, n0));
  }
  return cells;
}

std::string savings_csv(std::span<const SavingsCell> cells) {
  std::ostringstream out;
  out << "n,k,n0,Q,Qprime,e_percent\n";
  for (const SavingsCell& c : cells) {
    out << c.n << ',' << c.k << ',' << c.n0 << ',';
    if (c.defined) {
      out << c.q.get_str() << ',' << c.qprime.get_str() << ',' << format_percent(c.percent);
    } else {
      out << ",,";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bellpoly

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bellpoly/bell_basic.hpp"
#include "bellpoly/bell_factorized.hpp"
#include "bellpoly/conv_calculus.hpp"
#include "bellpoly/cost_model.hpp"
#include "bellpoly/errors.hpp"
#include "bellpoly/factorization.hpp"
#include "support/oracles.hpp"

namespace {

using namespace bellpoly;
using Clock = std::chrono::steady_clock;

std::size_t idx(std::int64_t i) { return static_cast<std::size_t>(i); }
std::uint64_t u(std::int64_t i) { return static_cast<std::uint64_t>(i); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Published savings table: rows k, columns n, blank cells are empty strings.
const std::vector<std::int64_t> kTableN{50, 100, 250, 500, 750, 1000, 5000, 10000, 100000};
const std::vector<std::int64_t> kTableK{10, 50, 100, 250, 500, 750, 1000, 5000, 10000};
const std::vector<std::vector<std::string>> kTable{
    {"12.9", "22.5", "27.2", "28.6", "29.1", "29.3", "29.9", "29.9", "30.0"},
    {"", "19.2", "64.8", "71.3", "73.0", "73.8", "75.6", "75.8", "76.0"},
    {"", "", "63.7", "78.8", "81.8", "83.0", "85.5", "85.7", "86.0"},
    {"", "", "", "73.9", "85.1", "88.1", "92.5", "92.9", "93.2"},
    {"", "", "", "", "66.9", "85.1", "95.3", "95.8", "96.2"},
    {"", "", "", "", "", "58.5", "96.3", "96.9", "97.3"},
    {"", "", "", "", "", "", "96.7", "97.4", "97.9"},
    {"", "", "", "", "", "", "", "97.9", "99.4"},
    {"", "", "", "", "", "", "", "", "99.7"},
};

Outcome table_reproduction() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto cells = table1(kTableN, kTableK);
  int printed = 0;
  for (std::size_t r = 0; r < kTableK.size(); ++r) {
    for (std::size_t c = 0; c < kTableN.size(); ++c) {
      const std::string& want = kTable[r][c];
      if (want.empty()) continue;
      ++printed;
      const SavingsCell& cell = cells[r * kTableN.size() + c];
      const std::string got = cell.defined ? format_percent(cell.percent) : "blank";
      if (got != want) {
        out.fail("k=" + std::to_string(kTableK[r]) + " n=" + std::to_string(kTableN[c]) + ": " + got + " vs " + want);
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 1.0) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok) out.detail = std::to_string(printed) + " printed cells exact, " + std::to_string(secs * 1000) + " ms";
  return out;
}

Outcome limit_column() {
  Outcome out;
  const Rational tenth(BigInt(1), BigInt(10));
  for (std::size_t r = 0; r < kTableK.size(); ++r) {
    const Rational printed = Rational::parse(kTable[r].back().substr(0, kTable[r].back().find('.')) +
                                             kTable[r].back().substr(kTable[r].back().find('.') + 1)) /
                             Rational(10);
    const Rational gap = savings_limit(kTableK[r]) - printed;
    if (gap > tenth || gap < -tenth) out.fail("k=" + std::to_string(kTableK[r]) + " off by " + gap.to_string());
  }
  if (out.ok) out.detail = "all 9 rows within 0.1 points";
  return out;
}

Outcome counter_exactness() {
  Outcome out;
  const auto t0 = Clock::now();
  testing::RandomRationals gen(101);
  int runs = 0;
  for (std::int64_t n0 = 0; n0 <= 3; ++n0) {
    const Sequence x = gen.sequence_with_lead(n0 + 1, 60, gen.nonzero());
    const Sequence x_full = Sequence::generate(1, 60, [&](std::int64_t i) { return x.at(i); });
    for (std::int64_t k = 2; k <= 12; ++k) {
      const Factorization f = factorize(k);
      for (std::int64_t n = k; n <= 60; ++n) {
        if (n - k * n0 < k) continue;
        auto check = [&](const BellResult& r, const BigInt& want, const char* what) {
          ++runs;
          if (!r.cost || !r.cost->measured || BigInt(static_cast<unsigned long>(*r.cost->measured)) != want) {
            std::ostringstream s;
            s << what << " n=" << n << " k=" << k << " n0=" << n0;
            out.fail(s.str());
          }
        };
        OpCounter c;
        if (n0 == 0) {
          check(bell_exp_alg91(x_full, n, k, &c), cost_q(n, k), "Q");
          c.reset();
          check(bell_exp_alg92(x_full, n, k, f, &c), cost_qprime(n, k, f), "Q'");
          c.reset();
        }
        check(bell_exp_genal(x_full, n, k, &c), cost_qprime_n0(n, k, f, n0), "Q'_n0");
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 60.0) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok) out.detail = std::to_string(runs) + " instrumented runs exact, " + std::to_string(secs) + " s";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  const auto t0 = Clock::now();
  testing::RandomRationals gen(102);
  int comparisons = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // A quarter of the inputs start with zeros so the break-down path is exercised.
    const std::int64_t zeros = trial % 4 == 3 ? gen.uniform(1, 2) : 0;
    const Sequence tail = gen.sequence_with_lead(zeros + 1, 40, gen.nonzero());
    const Sequence x = Sequence::generate(1, 40, [&](std::int64_t i) { return tail.at(i); });

    const std::int64_t nb = gen.uniform(1, 12);
    for (std::int64_t k = 1; k <= nb; ++k) {
      ++comparisons;
      if (bell_exp_bruteforce(x, nb, k) != bell_exp_recurrence(x, nb, k).value) {
        out.fail("brute force vs recurrence, trial " + std::to_string(trial));
      }
    }

    const std::int64_t n = gen.uniform(2, 40);
    for (std::int64_t k = 1; k <= n; ++k) {
      const Rational ref = bell_exp_recurrence(x, n, k).value;
      std::vector<Rational> legs{bell_exp_alg91(x, n, k).value, bell_exp_genal(x, n, k).value};
      if (k >= 2) legs.push_back(bell_exp_alg92(x, n, k, factorize(k)).value);
      if (n <= 12) legs.push_back(bell_exp_bruteforce(x, n, k));
      for (const Rational& v : legs) {
        ++comparisons;
        if (v != ref) out.fail("trial " + std::to_string(trial) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 60.0) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok) out.detail = std::to_string(comparisons) + " comparisons over 200 sequences, " + std::to_string(secs) + " s";
  return out;
}

Outcome stirling_check() {
  Outcome out;
  const auto s = testing::stirling2_table(10);
  const Sequence ones = Sequence::generate(1, 10, [](std::int64_t) { return Rational(1); });
  for (std::int64_t n = 0; n <= 10; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      if (bell_exp_recurrence(ones, n, k).value != Rational(s[idx(n)][idx(k)])) {
        out.fail("S(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  if (out.ok) out.detail = "66 values exact";
  return out;
}

Outcome root_round_trips() {
  Outcome out;
  testing::RandomRationals gen(103);
  int sign_pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Sequence x = gen.sequence_with_lead(0, 30, Rational(1));
    for (std::uint64_t k = 2; k <= 5; ++k) {
      const RootResult r = conv_root(x, k, 30);
      if (conv_power(r.root, k, 30) != x) out.fail("trial " + std::to_string(trial) + " k=" + std::to_string(k));
      if (k % 2 == 0) {
        const Sequence neg = Sequence::generate(0, 30, [&](std::int64_t i) { return -r.root.at(i); });
        if (!r.sign_pair || conv_power(neg, k, 30) != x) out.fail("sign pair, k=" + std::to_string(k));
        ++sign_pairs;
      } else if (r.sign_pair) {
        out.fail("odd k flagged as sign pair");
      }
    }
  }
  if (out.ok) out.detail = "400 roots exact through index 30, " + std::to_string(sign_pairs) + " sign pairs";
  return out;
}

Outcome inverse_round_trips() {
  Outcome out;
  testing::RandomRationals gen(104);
  const std::int64_t up_to = 20;
  for (std::int64_t k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      const Sequence x = gen.sequence_with_lead(1, up_to, Rational(1));
      const std::int64_t last = up_to - 1 + k;
      const Sequence y_ord = Sequence::generate(1, last, [&](std::int64_t n) { return bell_ord_recurrence(x, n, k).value; });
      const Sequence y_exp = Sequence::generate(1, last, [&](std::int64_t n) { return bell_exp_recurrence(x, n, k).value; });
      if (invert_bell_ordinary(y_ord, k, up_to) != x) out.fail("ordinary k=" + std::to_string(k));
      if (invert_bell_exponential(y_exp, k, up_to) != x) out.fail("exponential k=" + std::to_string(k));
    }
  }
  if (out.ok) out.detail = "both flavors exact for k=1..6, n<=20";
  return out;
}

Outcome identity_suite() {
  Outcome out;
  testing::RandomRationals gen(105);
  const std::int64_t n_max = 24;
  int checks = 0;

  // Composition, ordinary and exponential.
  for (int trial = 0; trial < 2; ++trial) {
    const Sequence x = gen.sequence(1, n_max);
    const BellTable exp_x = bell_exp_table(x, n_max);
    for (std::int64_t k1 = 1; k1 <= 6; ++k1) {
      for (std::int64_t k2 = 1; k1 * k2 <= 12; ++k2) {
        const auto inner = bell_ord_column(x, k1, n_max);
        const Sequence y_ord = Sequence::generate(1, n_max, [&](std::int64_t m) { return inner[idx(m)]; });
        ++checks;
        if (bell_ord_column(y_ord, k2, n_max) != bell_ord_column(x, k1 * k2, n_max)) {
          out.fail("ordinary composition k1=" + std::to_string(k1) + " k2=" + std::to_string(k2));
        }
        const Sequence y_exp = Sequence::generate(1, n_max, [&](std::int64_t m) { return exp_x[idx(k1)][idx(m)]; });
        const BellTable exp_y = bell_exp_table(y_exp, n_max);
        const Rational pre = pow(Rational(factorial(u(k1))), k2) * Rational(factorial(u(k2))) /
                             Rational(factorial(u(k1 * k2)));
        for (std::int64_t n = 0; n <= n_max; ++n) {
          ++checks;
          if (exp_x[idx(k1 * k2)][idx(n)] != pre * exp_y[idx(k2)][idx(n)]) {
            out.fail("exponential composition k1=" + std::to_string(k1) + " k2=" + std::to_string(k2));
          }
        }
      }
    }
  }

  // Constant ratio, independent of the argument.
  const Sequence a = gen.sequence_with_lead(1, n_max, gen.nonzero());
  const Sequence b = gen.sequence_with_lead(1, n_max, gen.nonzero());
  for (std::int64_t k1 = 1; k1 <= 4; ++k1) {
    for (std::int64_t k2 = 1; k1 * k2 <= 8; ++k2) {
      for (std::int64_t n = k1 * k2; n <= 16; ++n) {
        try {
          ++checks;
          const Rational ra = nested_ratio_check(a, n, k1, k2);
          const Rational rb = nested_ratio_check(b, n, k1, k2);
          const Rational want = pow(Rational(factorial(u(k1))), k2 - 1) / pow(Rational(factorial(u(k2))), k1 - 1);
          if (ra != rb || ra != want) out.fail("ratio k1=" + std::to_string(k1) + " k2=" + std::to_string(k2));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Degenerate) throw;
        }
      }
    }
  }

  // First-index break-down.
  for (std::int64_t n0 = 0; n0 <= 3; ++n0) {
    const Sequence x = gen.sequence_with_lead(n0 + 1, n_max, gen.nonzero());
    const Sequence y = Sequence::generate(1, n_max, [&](std::int64_t m) {
      return x.at(m + n0) / Rational(falling_factorial(u(m + n0), u(n0)));
    });
    for (std::int64_t k = 1; k <= 5; ++k) {
      for (std::int64_t n = k * (n0 + 1); n <= n_max; ++n) {
        ++checks;
        const Rational rhs = Rational(falling_factorial(u(n), u(k * n0))) * bell_exp_recurrence(y, n - k * n0, k).value;
        if (bell_exp_recurrence(x, n, k).value != rhs) {
          out.fail("break-down n=" + std::to_string(n) + " k=" + std::to_string(k) + " n0=" + std::to_string(n0));
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checks) + " identity checks exact";
  return out;
}

Outcome ordering_optimality() {
  Outcome out;
  int orderings = 0;
  for (std::int64_t k = 4; k <= 30; ++k) {
    if (is_prime(k)) continue;
    const Factorization f = factorize(k);
    for (std::int64_t n = k; n <= 4 * k; ++n) {
      const BigInt best = cost_qprime(n, f.factors());
      std::vector<std::int64_t> p = f.factors();
      std::sort(p.begin(), p.end());
      do {
        ++orderings;
        if (cost_qprime(n, p) < best) out.fail("k=" + std::to_string(k) + " n=" + std::to_string(n));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          if (p[i] < p[i + 1]) continue;
          try {
            const OrderingDelta d = ordering_cost_delta(n, p, i);
            if (d.closed_form != d.by_difference || d.by_difference < d.lower_bound) {
              out.fail("delta k=" + std::to_string(k) + " n=" + std::to_string(n));
            }
          } catch (const Error&) {
            out.fail("delta disagreement k=" + std::to_string(k) + " n=" + std::to_string(n));
          }
        }
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  if (out.ok) out.detail = std::to_string(orderings) + " orderings, descending order minimal, deltas exact";
  return out;
}

Outcome selection_sanity() {
  Outcome out;
  const AlgorithmChoice small = select_algorithm(10, 4, 0);
  if (small.tag != Algorithm::Alg91 || small.alg91_cost != 214 || cost_qprime(10, 4, factorize(4)) != 310) {
    out.fail("(10,4) picked " + std::string(algorithm_name(small.tag)));
  }
  const AlgorithmChoice big = select_algorithm(100, 10, 0);
  if (big.tag != Algorithm::Alg92 || big.alg91_cost != 83002 || big.predicted_cost != 64327) {
    out.fail("(100,10) picked " + std::string(algorithm_name(big.tag)));
  }
  if (out.ok) out.detail = "ALG91 at (10,4): 214 < 310; ALG92 at (100,10): 64327 < 83002";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", table_reproduction},
      {"limit column", limit_column},
      {"counter exactness", counter_exactness},
      {"oracle equivalence", oracle_equivalence},
      {"stirling check", stirling_check},
      {"root round trips", root_round_trips},
      {"inverse round trips", inverse_round_trips},
      {"identity suite", identity_suite},
      {"ordering optimality", ordering_optimality},
      {"selection sanity", selection_sanity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failures;
    std::printf("%s %2zu %-20s %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}

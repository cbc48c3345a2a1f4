#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "bellpoly/bell_basic.hpp"
#include "bellpoly/bell_factorized.hpp"
#include "bellpoly/conv_calculus.hpp"
#include "bellpoly/cost_model.hpp"
#include "bellpoly/errors.hpp"
#include "bellpoly/rational.hpp"

namespace bellpoly::cli {
namespace {

using nlohmann::json;

// Thrown for bad flag combinations found after CLI11 has parsed the line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string seq;
  std::string path;
  std::int64_t start = 1;

  void attach(CLI::App* app) {
    auto* s = app->add_option("--seq", seq, "named sequence: ones, factorial, geometric:r");
    auto* p = app->add_option("--in", path, "sequence JSON file");
    s->excludes(p);
    app->add_option("--start", start, "first index of a named sequence")->capture_default_str();
  }

  bool given() const { return !seq.empty() || !path.empty(); }

  // Files are read whole; named sequences are sampled on [start, last].
  Sequence load(std::int64_t last) const {
    if (!path.empty()) return parse_sequence_file(path);
    return named_sequence(seq, start, last);
  }
};

Flavor parse_flavor(const std::string& s) { return s == "ord" ? Flavor::Ordinary : Flavor::Exponential; }

AlgorithmRequest parse_algorithm(const std::string& s) {
  if (s == "recurrence") return AlgorithmRequest::Recurrence;
  if (s == "91") return AlgorithmRequest::Alg91;
  if (s == "92") return AlgorithmRequest::Alg92;
  if (s == "genal") return AlgorithmRequest::GenAl;
  return AlgorithmRequest::Auto;
}

std::string cost_string(const BigInt& v) { return v.get_str(); }

json cell_json(const SavingsCell& c) {
  json j{{"n", c.n}, {"k", c.k}, {"n0", c.n0}, {"factorized", c.factorized}};
  if (c.defined) {
    j["Q"] = cost_string(c.q);
    j["Qprime"] = cost_string(c.qprime);
    j["e_percent"] = format_percent(c.percent);
  } else {
    j["Q"] = nullptr;
    j["Qprime"] = nullptr;
    j["e_percent"] = nullptr;
  }
  return j;
}

void write_cells(std::ostream& out, const std::vector<SavingsCell>& cells, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : cells) arr.push_back(cell_json(c));
    out << arr.dump() << "\n";
  } else {
    out << savings_csv(cells);
  }
}

void write_sequence(std::ostream& out, const Sequence& s, const std::string& format) {
  if (format == "plain") {
    for (std::int64_t i = s.start(); i <= s.last(); ++i) out << i << " " << s.at(i).to_string() << "\n";
  } else {
    out << sequence_to_json(s) << "\n";
  }
}

int emit_error(std::ostream& err, std::string_view code, std::string_view message, int status) {
  err << json{{"code", code}, {"message", message}}.dump() << "\n";
  return status;
}

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::MalformedJson || c == ErrorCode::MissingField ||
         c == ErrorCode::IoError;
}

}  // namespace

Sequence parse_sequence_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::MalformedJson, "sequence document must be a JSON object");
  if (!doc.contains("start")) throw Error(ErrorCode::MissingField, "missing field \"start\"");
  if (!doc.contains("terms")) throw Error(ErrorCode::MissingField, "missing field \"terms\"");
  const json& start = doc["start"];
  if (!start.is_number_integer()) throw Error(ErrorCode::ParseError, "\"start\" must be an integer");
  const json& terms = doc["terms"];
  if (!terms.is_array()) throw Error(ErrorCode::ParseError, "\"terms\" must be an array");
  std::vector<Rational> values;
  values.reserve(terms.size());
  for (const json& t : terms) {
    if (!t.is_string()) throw Error(ErrorCode::ParseError, "terms must be strings of the form \"p\" or \"p/q\"");
    values.push_back(Rational::parse(t.get<std::string>()));
  }
  return Sequence(start.get<std::int64_t>(), std::move(values)).canonicalized();
}

Sequence parse_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence_json(buf.str());
}

std::string sequence_to_json(const Sequence& s) {
  json terms = json::array();
  for (const Rational& t : s.terms()) terms.push_back(t.to_string());
  return json{{"start", s.start()}, {"terms", terms}}.dump();
}

Sequence named_sequence(std::string_view name, std::int64_t start, std::int64_t last) {
  if (start < 0) throw UsageError("named sequences start at index 0 or later");
  if (name == "ones") return Sequence::generate(start, last, [](std::int64_t) { return Rational(1); });
  if (name == "factorial") {
    return Sequence::generate(start, last, [](std::int64_t i) {
      return Rational(factorial(static_cast<std::uint64_t>(i)));
    });
  }
  constexpr std::string_view geo = "geometric:";
  if (name.substr(0, geo.size()) == geo) {
    const Rational r = Rational::parse(name.substr(geo.size()));
    return Sequence::generate(start, last, [&](std::int64_t i) { return pow(r, i); });
  }
  throw UsageError("unknown sequence name '" + std::string(name) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partial Bell polynomials, convolution powers and roots, cost tables", "bellpoly"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  // bell
  struct {
    std::int64_t n = 0, k = 0;
    std::string flavor = "exp", algorithm = "auto", format = "plain";
    bool report = false;
    Input in;
  } bell;
  auto* bell_cmd = app.add_subcommand("bell", "evaluate B_{n,k}(x)");
  bell_cmd->add_option("--n", bell.n)->required()->check(CLI::NonNegativeNumber);
  bell_cmd->add_option("--k", bell.k)->required()->check(CLI::NonNegativeNumber);
  bell_cmd->add_option("--flavor", bell.flavor)->check(CLI::IsMember({"exp", "ord"}))->capture_default_str();
  bell_cmd->add_option("--algorithm", bell.algorithm)
      ->check(CLI::IsMember({"auto", "recurrence", "91", "92", "genal"}))
      ->capture_default_str();
  bell_cmd->add_option("--format", bell.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
  bell_cmd->add_flag("--report", bell.report, "include algorithm and operation counts (json)");
  bell.in.attach(bell_cmd);

  // conv-power
  struct {
    std::int64_t k = 0, up_to = 0;
    std::string format = "json";
    Input in;
  } power;
  auto* power_cmd = app.add_subcommand("conv-power", "k-th convolution power through index --up-to");
  power_cmd->add_option("--k", power.k)->required()->check(CLI::NonNegativeNumber);
  power_cmd->add_option("--up-to", power.up_to)->required();
  power_cmd->add_option("--format", power.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
  power.in.attach(power_cmd);

  // conv-root
  struct {
    std::int64_t k = 0, up_to = 10;
    std::string format = "json";
    Input in;
  } root;
  auto* root_cmd = app.add_subcommand("conv-root", "k-th convolution root through index --up-to");
  root_cmd->add_option("--k", root.k)->required()->check(CLI::PositiveNumber);
  root_cmd->add_option("--up-to", root.up_to)->capture_default_str();
  root_cmd->add_option("--format", root.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
  root.in.attach(root_cmd);

  // invert
  struct {
    std::int64_t k = 0, up_to = 10;
    std::string flavor = "exp", x1, format = "json";
    Input in;
  } inv;
  auto* inv_cmd = app.add_subcommand("invert", "recover x_1..x_{up-to} from y_n = B_{n,k}(x)");
  inv_cmd->add_option("--k", inv.k)->required()->check(CLI::PositiveNumber);
  inv_cmd->add_option("--up-to", inv.up_to)->capture_default_str()->check(CLI::PositiveNumber);
  inv_cmd->add_option("--flavor", inv.flavor)->check(CLI::IsMember({"exp", "ord"}))->capture_default_str();
  inv_cmd->add_option("--x1", inv.x1, "first term of x (default: the rational k-th root of y_k)");
  inv_cmd->add_option("--format", inv.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();
  inv.in.attach(inv_cmd);

  // compound
  struct {
    std::int64_t k = 0, n = 0;
    Input in;
  } compound;
  auto* compound_cmd = app.add_subcommand("compound", "P(S_k = n) for a sum of k i.i.d. steps");
  compound_cmd->add_option("--k", compound.k)->required()->check(CLI::PositiveNumber);
  compound_cmd->add_option("--n", compound.n)->required()->check(CLI::NonNegativeNumber);
  compound.in.attach(compound_cmd);

  // table1
  struct {
    std::vector<std::int64_t> ns{50, 100, 250, 500, 750, 1000, 5000, 10000, 100000};
    std::vector<std::int64_t> ks{10, 50, 100, 250, 500, 750, 1000, 5000, 10000};
    std::int64_t n0 = 0;
    std::string format = "csv";
  } table;
  auto* table_cmd = app.add_subcommand("table1", "savings grid e(n) over n x k");
  table_cmd->add_option("--ns", table.ns)->delimiter(',')->capture_default_str();
  table_cmd->add_option("--ks", table.ks)->delimiter(',')->capture_default_str();
  table_cmd->add_option("--n0", table.n0)->check(CLI::NonNegativeNumber)->capture_default_str();
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  // figure1
  struct {
    std::int64_t k = 50, n_max = 2500;
    std::vector<std::int64_t> n0s{0, 1, 2, 3, 4, 5};
    std::string format = "csv";
  } figure;
  auto* figure_cmd = app.add_subcommand("figure1", "savings curves e(n), n = k..n-max, one per n0");
  figure_cmd->add_option("--k", figure.k)->check(CLI::PositiveNumber)->capture_default_str();
  figure_cmd->add_option("--n-max", figure.n_max)->capture_default_str();
  figure_cmd->add_option("--n0s", figure.n0s)->delimiter(',')->capture_default_str();
  figure_cmd->add_option("--format", figure.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  // bench
  struct {
    std::int64_t k_max = 12, n_max = 60, n0_max = 3, seed = 1;
    bool verify = false;
  } bench;
  auto* bench_cmd = app.add_subcommand("bench", "instrumented operation counts against the cost polynomials");
  bench_cmd->add_option("--k-max", bench.k_max)->check(CLI::Range(2, 1000))->capture_default_str();
  bench_cmd->add_option("--n-max", bench.n_max)->check(CLI::Range(2, 10000))->capture_default_str();
  bench_cmd->add_option("--n0-max", bench.n0_max)->check(CLI::Range(0, 100))->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_flag("--verify", bench.verify, "exit nonzero on any mismatch");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error(err, "USAGE_ERROR", e.what(), 2);
  }

  auto need_input = [](const Input& in, std::string_view cmd) {
    if (!in.given()) throw UsageError(std::string(cmd) + " needs --seq or --in");
  };

  // Every flag and the input are checked before any computation starts.
  try {
    if (bell_cmd->parsed()) {
      need_input(bell.in, "bell");
      const Sequence x = bell.in.load(bell.n);
      const Flavor flavor = parse_flavor(bell.flavor);
      OpCounter counter;
      const BellResult r =
          compute_bell(x, bell.n, bell.k, flavor, parse_algorithm(bell.algorithm), bell.report ? &counter : nullptr);
      if (bell.format == "plain") {
        out << r.value.to_string() << "\n";
        return 0;
      }
      json j{{"n", bell.n}, {"k", bell.k}, {"flavor", bell.flavor}, {"value", r.value.to_string()}};
      if (bell.report) {
        j["algorithm"] = algorithm_name(r.algorithm);
        if (r.cost) {
          j["predicted_ops"] = cost_string(r.cost->predicted);
          if (r.cost->measured) j["measured_ops"] = *r.cost->measured;
        }
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (power_cmd->parsed()) {
      need_input(power.in, "conv-power");
      const Sequence x = power.in.load(power.up_to);
      write_sequence(out, conv_power(x, static_cast<std::uint64_t>(power.k), power.up_to), power.format);
      return 0;
    }

    if (root_cmd->parsed()) {
      need_input(root.in, "conv-root");
      const Sequence x = root.in.load(root.up_to);
      write_sequence(out, conv_root(x, static_cast<std::uint64_t>(root.k), root.up_to).root, root.format);
      return 0;
    }

    if (inv_cmd->parsed()) {
      need_input(inv.in, "invert");
      std::optional<Rational> x1;
      if (!inv.x1.empty()) x1 = Rational::parse(inv.x1);
      const Sequence y = inv.in.load(inv.up_to - 1 + inv.k);
      const Sequence x = parse_flavor(inv.flavor) == Flavor::Ordinary
                             ? invert_bell_ordinary(y, inv.k, inv.up_to, x1)
                             : invert_bell_exponential(y, inv.k, inv.up_to, x1);
      write_sequence(out, x, inv.format);
      return 0;
    }

    if (compound_cmd->parsed()) {
      need_input(compound.in, "compound");
      const Sequence p = compound.in.load(compound.n);
      out << compound_distribution(p, compound.k, compound.n).to_string() << "\n";
      return 0;
    }

    if (table_cmd->parsed()) {
      write_cells(out, table1(table.ns, table.ks, table.n0), table.format);
      return 0;
    }

    if (figure_cmd->parsed()) {
      write_cells(out, figure1_data(figure.k, figure.n_max, figure.n0s), figure.format);
      return 0;
    }

    if (bench_cmd->parsed()) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(bench.seed));
      std::uniform_int_distribution<int> num(-9, 9);
      std::uniform_int_distribution<int> den(1, 7);
      out << "algorithm,n,k,n0,predicted,measured\n";
      int mismatches = 0;
      auto row = [&](std::string_view name, std::int64_t n, std::int64_t k, std::int64_t n0, const BellResult& r) {
        const CostReport& c = *r.cost;
        out << name << "," << n << "," << k << "," << n0 << "," << cost_string(c.predicted) << "," << *c.measured
            << "\n";
        if (!c.consistent()) ++mismatches;
      };
      for (std::int64_t n0 = 0; n0 <= bench.n0_max; ++n0) {
        const Sequence x = Sequence::generate(1, bench.n_max, [&](std::int64_t i) {
          if (i <= n0) return Rational(0);
          if (i == n0 + 1) return Rational(BigInt(den(rng)));
          return Rational(BigInt(num(rng)), BigInt(den(rng)));
        });
        for (std::int64_t k = 2; k <= bench.k_max; ++k) {
          for (std::int64_t n = k; n <= bench.n_max; ++n) {
            if (n - k * n0 < k) continue;
            OpCounter counter;
            if (n0 == 0) {
              row("ALG91", n, k, n0, bell_exp_alg91(x, n, k, &counter));
              row("ALG92", n, k, n0, bell_exp_alg92(x, n, k, factorize(k), &counter));
            }
            row("GENAL", n, k, n0, bell_exp_genal(x, n, k, &counter));
          }
        }
      }
      if (bench.verify && mismatches > 0) {
        return emit_error(err, "COST_MISMATCH", std::to_string(mismatches) + " measured counts differ from prediction",
                          1);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    return emit_error(err, "USAGE_ERROR", e.what(), 2);
  } catch (const Error& e) {
    return emit_error(err, e.code_name(), e.what(), is_input_error(e.code()) ? 2 : 1);
  }
  return 0;
}

}  // namespace bellpoly::cli

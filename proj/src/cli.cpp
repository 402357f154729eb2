#include "partexp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "partexp/io.hpp"
#include "partexp/partitions.hpp"
#include "partexp/sequences.hpp"
#include "partexp/verify.hpp"

namespace partexp {

namespace {

enum class Format { Plain, Csv, Json };

const std::map<std::string, Format> kFormats{
    {"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option_function<std::string>(
         "--format", [&format](const std::string& name) { format = kFormats.at(name); },
         "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->option_text("plain|csv|json");
}

struct FlavorFlags {
  bool odd = false;
  std::int64_t not_div = 0;
  CLI::Option* odd_opt = nullptr;
  CLI::Option* not_div_opt = nullptr;

  void attach(CLI::App* cmd) {
    odd_opt = cmd->add_flag("--odd", odd, "Only odd divisors / odd parts");
    not_div_opt = cmd->add_option("--not-div", not_div, "Only divisors / parts not divisible by Q")
                      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()))
                      ->option_text("Q");
    odd_opt->excludes(not_div_opt);
    not_div_opt->excludes(odd_opt);
  }

  DivisorFlavor flavor() const {
    if (odd) return DivisorFlavor::odd();
    if (not_div_opt->count() > 0) return DivisorFlavor::not_divisible_by(not_div);
    return DivisorFlavor::all();
  }
};

/// Sequence output shared by exp and log. Plain output is itself a valid
/// sequence file.
void print_sequence(std::ostream& out, std::span<const Rational> terms, Format format) {
  switch (format) {
    case Format::Plain:
      out << sequence_to_text(terms);
      break;
    case Format::Csv:
      out << "index,value\n";
      for (std::size_t i = 0; i < terms.size(); ++i) out << i << ',' << format_rational(terms[i]) << '\n';
      break;
    case Format::Json:
      out << sequence_to_json(terms) << '\n';
      break;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json_object(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

std::vector<Rational> leading_terms(std::span<const Rational> terms, std::optional<std::size_t> order) {
  const std::size_t n = order.value_or(terms.size());
  if (n == 0) throw std::domain_error("order must be positive");
  if (n > terms.size()) {
    throw std::domain_error("order " + std::to_string(n) + " exceeds the " +
                            std::to_string(terms.size()) + " terms available");
  }
  return {terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(n)};
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
  std::string kind;
  std::size_t n = 0;
  FlavorFlags flags;
  Format format = Format::Plain;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const DivisorFlavor flavor = a.flags.flavor();
  std::vector<std::pair<std::size_t, Rational>> rows;
  if (a.kind == "p") {
    const auto p = partition_count(a.n, flavor);
    for (std::size_t i = 0; i < p.size(); ++i) rows.emplace_back(i, Rational(p[i]));
  } else {
    for (std::size_t i = 1; i <= a.n; ++i) {
      const auto k = static_cast<std::int64_t>(i);
      Rational v(divisor_sum(k, flavor));
      if (a.kind == "sigma-bar") v /= static_cast<unsigned long>(i);
      rows.emplace_back(i, v);
    }
  }
  switch (a.format) {
    case Format::Plain:
      for (const auto& [i, v] : rows) out << i << ' ' << format_rational(v) << '\n';
      break;
    case Format::Csv:
      out << "index,value\n";
      for (const auto& [i, v] : rows) out << i << ',' << format_rational(v) << '\n';
      break;
    case Format::Json: {
      std::vector<Rational> values;
      for (const auto& row : rows) values.push_back(row.second);
      out << sequence_to_json(values) << '\n';
      break;
    }
  }
  return 0;
}

// ---- exp / log ------------------------------------------------------------

struct ExpArgs {
  std::string seed;
  std::int64_t q = 0;
  std::string file;
  std::optional<std::size_t> order;
  bool matrix = false;
  Format format = Format::Plain;
};

int cmd_exp(const ExpArgs& a, std::ostream& out, const CliHooks& hooks) {
  BandMatrix s = BandMatrix::zero(1);
  if (!a.file.empty()) {
    const std::string text = read_file(a.file);
    if (looks_like_json_object(text)) {
      s = band_from_json(text);
      if (s[0] != 0) throw std::domain_error("seed matrix requires s_0 = 0 (band[0] must be 0)");
      if (a.order) s = BandMatrix(leading_terms(s.band(), a.order));
    } else {
      const SeedSequence seed(parse_sequence_text(text));
      s = seed_matrix(seed, a.order.value_or(seed.size()));
    }
  } else {
    if (!a.order) throw std::invalid_argument("--order is required with --seed");
    DivisorFlavor flavor = DivisorFlavor::all();
    if (a.seed == "sigma-odd") flavor = DivisorFlavor::odd();
    if (a.seed == "sigma-not-div") {
      if (a.q == 0) throw std::invalid_argument("--seed sigma-not-div needs --q");
      flavor = DivisorFlavor::not_divisible_by(a.q);
    }
    if (*a.order == 0) throw std::domain_error("order must be positive");
    s = seed_matrix(seed_from_flavor(*a.order - 1, flavor), *a.order);
  }
  const BandMatrix t = toeplitz_exp(s, hooks.product);
  if (a.matrix) {
    out << band_to_json(t) << '\n';
  } else {
    print_sequence(out, t.band(), a.format);
  }
  return 0;
}

struct LogArgs {
  std::string file;
  std::optional<std::size_t> order;
  bool matrix = false;
  Format format = Format::Plain;
};

int cmd_log(const LogArgs& a, std::ostream& out, const CliHooks& hooks) {
  const std::string text = read_file(a.file);
  std::vector<Rational> terms;
  if (looks_like_json_object(text)) {
    const BandMatrix m = band_from_json(text);
    terms.assign(m.band().begin(), m.band().end());
  } else {
    terms = parse_sequence_text(text);
  }
  const TransformedSequence t(leading_terms(terms, a.order));
  const BandMatrix s = toeplitz_log(BandMatrix({t.terms().begin(), t.terms().end()}), hooks.product);
  if (a.matrix) {
    out << band_to_json(s) << '\n';
  } else {
    const SeedSequence seed = seed_from_band(s);
    print_sequence(out, seed.terms(), a.format);
  }
  return 0;
}

// ---- partitions -----------------------------------------------------------

struct PartitionArgs {
  std::int64_t n = 0;
  std::optional<std::int64_t> parts;
  FlavorFlags flags;
  Format format = Format::Plain;
};

int cmd_partitions(const PartitionArgs& a, std::ostream& out) {
  const auto list = enumerate_partitions(a.n, a.parts, a.flags.flavor());
  switch (a.format) {
    case Format::Plain:
      for (const auto& p : list) out << p.to_string() << '\n';
      out << "count " << list.size() << '\n';
      break;
    case Format::Csv:
      out << "index,partition\n";
      for (std::size_t i = 0; i < list.size(); ++i) out << i << ',' << list[i].to_string() << '\n';
      out << "count," << list.size() << '\n';
      break;
    case Format::Json: {
      nlohmann::json doc;
      doc["partitions"] = nlohmann::json::array();
      for (const auto& p : list) doc["partitions"].push_back(p.to_string());
      doc["count"] = list.size();
      out << doc.dump() << '\n';
      break;
    }
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::int64_t max_n = 25;
  std::size_t order = 12;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, const CliHooks& hooks) {
  VerifyConfig config;
  config.max_n = a.max_n;
  config.order = a.order;
  config.product = hooks.product;
  config.parallel = !a.serial;
  const auto results = run_verification(config);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      out << "PASS  " << r.name << '\n';
    } else {
      ++failed;
      out << "FAIL  " << r.name << ": " << r.witness << '\n';
    }
  }
  out << (results.size() - failed) << '/' << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  CLI::App app{"Exact Toeplitz exponentials and partition counting", "partexp"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print p, sigma or sigma-bar for indices up to N");
  table_cmd->add_option("--kind", table.kind, "p | sigma | sigma-bar")
      ->required()
      ->check(CLI::IsMember({"p", "sigma", "sigma-bar"}));
  table_cmd->add_option("--n", table.n, "Largest index")->required();
  table.flags.attach(table_cmd);
  add_format(table_cmd, table.format);

  ExpArgs exp;
  auto* exp_cmd = app.add_subcommand("exp", "Exponentiate a seed matrix");
  auto* seed_opt = exp_cmd->add_option("--seed", exp.seed, "sigma | sigma-odd | sigma-not-div")
                       ->check(CLI::IsMember({"sigma", "sigma-odd", "sigma-not-div"}));
  exp_cmd->add_option("--q", exp.q, "Modulus for sigma-not-div")
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()))
      ->option_text("Q");
  auto* exp_file = exp_cmd->add_option("--file", exp.file, "Seed sequence file or band matrix JSON");
  seed_opt->excludes(exp_file);
  exp_file->excludes(seed_opt);
  exp_cmd->add_option("--order", exp.order, "Matrix order (number of output terms)");
  exp_cmd->add_flag("--matrix", exp.matrix, "Emit the result as band matrix JSON");
  add_format(exp_cmd, exp.format);

  LogArgs log;
  auto* log_cmd = app.add_subcommand("log", "Recover the seed from a transformed sequence");
  log_cmd->add_option("--file", log.file, "Transformed sequence file or band matrix JSON")->required();
  log_cmd->add_option("--order", log.order, "Matrix order (number of output terms)");
  log_cmd->add_flag("--matrix", log.matrix, "Emit the logarithm as band matrix JSON");
  add_format(log_cmd, log.format);

  PartitionArgs parts;
  auto* parts_cmd = app.add_subcommand("partitions", "List partitions of N");
  parts_cmd->add_option("--n", parts.n, "Number to partition")->required()->check(CLI::PositiveNumber);
  parts_cmd->add_option("--parts", parts.parts, "Exact number of summands")->check(CLI::PositiveNumber);
  parts.flags.attach(parts_cmd);
  add_format(parts_cmd, parts.format);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suite");
  verify_cmd->add_option("--max-n", verify.max_n, "Bound on n for partition-sum checks")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--order", verify.order, "Bound on matrix order")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--serial", verify.serial, "Run checks on one thread");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table_cmd->parsed()) return cmd_table(table, out);
    if (exp_cmd->parsed()) {
      if (exp.seed.empty() && exp.file.empty()) {
        err << "exp: one of --seed or --file is required\n";
        return 2;
      }
      return cmd_exp(exp, out, hooks);
    }
    if (log_cmd->parsed()) return cmd_log(log, out, hooks);
    if (parts_cmd->parsed()) return cmd_partitions(parts, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, hooks);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace partexp

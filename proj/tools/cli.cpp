#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "tipsum/cascade.hpp"
#include "tipsum/coefficients.hpp"
#include "tipsum/cost_model.hpp"

namespace tipsum::cli {
namespace {

using nlohmann::ordered_json;

struct MomentArgs {
  std::vector<int> powers;
  std::string input_path;
  std::string format = "json";
  std::optional<std::int64_t> length;
  bool use_float = false;
};

struct CoeffsArgs {
  int power = 0;
  std::int64_t length = 1;
  std::string format = "json";
};

struct ComplexityArgs {
  std::vector<int> powers{2, 4, 7};
  std::vector<std::int64_t> lengths{10, 100, 1000, 10000};
};

struct SelfcheckArgs {
  std::uint64_t seed = selfcheck::Options{}.seed;
  int trials = selfcheck::Options{}.trials_per_case;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

ordered_json ops_json(const OpCount& ops) {
  return {{"general_mults", ops.general_mults}, {"constant_mults", ops.constant_mults}, {"additions", ops.additions}};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Reads one sample per line. Only the current line is held in memory.
template <typename OnSample>
std::int64_t read_samples(std::istream& in, OnSample&& on_sample) {
  std::string line;
  std::int64_t line_no = 0;
  std::int64_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!on_sample(text)) {
      throw UsageError("line " + std::to_string(line_no) + ": not a valid sample: '" + std::string(text) + "'");
    }
    ++count;
  }
  return count;
}

int cmd_moment(const MomentArgs& args, std::istream& default_in, std::ostream& out, std::ostream& err) {
  if (args.powers.empty()) throw UsageError("moment: at least one --power is required");
  if (std::any_of(args.powers.begin(), args.powers.end(), [](int k) { return k < 0; })) {
    throw UsageError("moment: powers must be non-negative");
  }
  if (args.length && *args.length < 1) throw UsageError("moment: --length must be >= 1");

  std::ifstream file;
  std::istream* in = &default_in;
  if (!args.input_path.empty() && args.input_path != "-") {
    file.open(args.input_path);
    if (!file) throw UsageError("cannot open input file: " + args.input_path);
    in = &file;
  }

  const int max_power = *std::max_element(args.powers.begin(), args.powers.end());
  std::vector<std::string> values;
  std::vector<OpCount> ops;
  OpCount pass_ops;
  std::int64_t n = 0;

  if (args.use_float) {
    FloatCascade cascade(max_power);
    n = read_samples(*in, [&](std::string_view text) {
      double v = 0.0;
      const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return false;
      cascade.push(v);
      return true;
    });
    if (n > 0) {
      for (const double s : cascade.multi_moment_finalize(args.powers)) values.push_back(format_double(s));
    }
  } else {
    Cascade cascade(max_power);
    n = read_samples(*in, [&](std::string_view text) {
      const auto v = ExactInt::parse(text);
      if (!v) return false;
      cascade.push(*v);
      return true;
    });
    if (n > 0) {
      for (const ExactInt& s : cascade.multi_moment_finalize(args.powers, &ops)) values.push_back(s.to_string());
      pass_ops = cascade.push_ops();
    }
  }

  if (n == 0) {
    err << "error: empty input: the weighted sum is undefined for N=0\n";
    return kEmptyInput;
  }
  if (args.length && *args.length != n) {
    throw UsageError("declared length " + std::to_string(*args.length) + " but read " + std::to_string(n) +
                     " samples");
  }

  if (args.format == "json") {
    ordered_json report;
    report["N"] = n;
    ordered_json results = ordered_json::array();
    for (std::size_t i = 0; i < args.powers.size(); ++i) {
      ordered_json r;
      r["K"] = args.powers[i];
      r["S"] = values[i];
      if (!args.use_float) r["ops"] = ops_json(ops[i]);
      results.push_back(std::move(r));
    }
    report["results"] = std::move(results);
    if (args.use_float) {
      report["warning"] = "double-precision cascade: results are approximate";
    } else {
      report["pass_ops"] = ops_json(pass_ops);
    }
    out << report.dump(2) << '\n';
  } else if (args.format == "csv") {
    out << "K,N,S\n";
    for (std::size_t i = 0; i < args.powers.size(); ++i) out << args.powers[i] << ',' << n << ',' << values[i] << '\n';
  } else {
    for (std::size_t i = 0; i < args.powers.size(); ++i) {
      out << "K=" << args.powers[i] << " N=" << n << " S=" << values[i] << '\n';
    }
  }
  return kOk;
}

int cmd_coeffs(const CoeffsArgs& args, std::ostream& out) {
  if (args.power < 0) throw UsageError("coeffs: --power must be >= 0");
  if (args.length < 1) throw UsageError("coeffs: --length must be >= 1");
  const CoefficientSet set = coefficients_closed(args.power, args.length);
  const char* note = "N < K+1: coefficients are valid but not unique on the sample grid";

  if (args.format == "json") {
    ordered_json report;
    report["K"] = set.power;
    report["N"] = set.length;
    ordered_json values = ordered_json::array();
    for (const ExactInt& c : set.values) values.push_back(c.to_string());
    report["coefficients"] = std::move(values);
    report["unique"] = set.unique_on_grid();
    if (!set.unique_on_grid()) report["note"] = note;
    out << report.dump(2) << '\n';
  } else if (args.format == "csv") {
    out << "k,c\n";
    for (std::size_t i = 0; i < set.size(); ++i) out << i + 1 << ',' << set.values[i] << '\n';
  } else {
    for (std::size_t i = 0; i < set.size(); ++i) out << "c_" << i + 1 << " = " << set.values[i] << '\n';
    if (!set.unique_on_grid()) out << "note: " << note << '\n';
  }
  return kOk;
}

int cmd_complexity(const ComplexityArgs& args, std::ostream& out) {
  const auto reports = costmodel::complexity_table(args.powers, args.lengths);
  costmodel::write_csv(out, reports);
  return kOk;
}

int cmd_selfcheck(const SelfcheckArgs& args, const Hooks& hooks, std::ostream& out) {
  selfcheck::Options options;
  options.seed = args.seed;
  options.trials_per_case = args.trials;
  options.coefficients = hooks.coefficients;
  const selfcheck::Report report = selfcheck::run(options);

  ordered_json j;
  j["seed"] = report.seed;
  j["status"] = report.passed() ? "all checks passed" : "failed";
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["cases"] = c.cases;
    cj["passed"] = c.passed();
    if (c.failure) {
      ordered_json v = ordered_json::array();
      for (const ExactInt& s : c.failure->samples) v.push_back(s.to_string());
      cj["counterexample"] = {
          {"K", c.failure->power}, {"N", c.failure->length}, {"v", std::move(v)}, {"detail", c.failure->detail}};
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  out << j.dump(2) << '\n';
  return report.passed() ? kOk : kSelfcheckFailed;
}

}  // namespace

std::string format_coefficient_table(int kmax) {
  if (kmax < 0) throw UsageError("table: --kmax must be >= 0");
  std::ostringstream os;
  os << 'K';
  for (int k = 1; k <= kmax + 1; ++k) os << "\tc_" << k << "(N)";
  os << '\n';
  for (int power = 0; power <= kmax; ++power) {
    os << power;
    for (const IntPolynomial& p : coefficient_polynomials(power)) os << '\t' << p.to_string('N');
    os << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Time-index powered weighted sums via cascaded accumulators", "tipsum"};
  app.require_subcommand(1);

  MomentArgs moment;
  auto* moment_cmd = app.add_subcommand("moment", "Compute sum_n n^K v[n] over a sample stream in one pass");
  moment_cmd->add_option("-K,--power", moment.powers, "Power K (repeatable)")->required();
  moment_cmd->add_option("--input", moment.input_path, "Input file (default: standard input)");
  moment_cmd->add_option("--format", moment.format)->check(CLI::IsMember({"json", "csv", "plain"}));
  moment_cmd->add_option("-N,--length", moment.length, "Expected sample count, checked at end of stream");
  moment_cmd->add_flag("--float", moment.use_float, "Use the double-precision cascade (approximate)");

  CoeffsArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Print c_1..c_{K+1} for a concrete (K, N)");
  coeffs_cmd->add_option("-K,--power", coeffs.power)->required();
  coeffs_cmd->add_option("-N,--length", coeffs.length)->required();
  coeffs_cmd->add_option("--format", coeffs.format)->check(CLI::IsMember({"json", "csv", "plain"}));

  int kmax = 5;
  auto* table_cmd = app.add_subcommand("table", "Print c_k(N) as polynomials in N for K = 0..kmax");
  table_cmd->add_option("--kmax", kmax, "Largest power (default 5)");

  ComplexityArgs complexity;
  auto* complexity_cmd = app.add_subcommand("complexity", "Emit operation counts as CSV");
  complexity_cmd->add_option("--Ks", complexity.powers, "Powers, comma separated")->delimiter(',');
  complexity_cmd->add_option("--Ns", complexity.lengths, "Lengths, comma separated")->delimiter(',');

  SelfcheckArgs check;
  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run randomized oracle and identity checks");
  selfcheck_cmd->add_option("--seed", check.seed, "Random seed");
  selfcheck_cmd->add_option("--trials", check.trials, "Random sequences per (K, N)")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*moment_cmd) return cmd_moment(moment, in, out, err);
    if (*coeffs_cmd) return cmd_coeffs(coeffs, out);
    if (*table_cmd) {
      out << format_coefficient_table(kmax);
      return kOk;
    }
    if (*complexity_cmd) return cmd_complexity(complexity, out);
    if (*selfcheck_cmd) return cmd_selfcheck(check, hooks, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace tipsum::cli

// mellint: verify the identity catalog from the command line.
//
// Exit codes: 0 passed, 1 usage or config error, 2 verification failed,
// 3 domain or convergence error.

#include "mellint/errors.hpp"
#include "mellint/export.hpp"
#include "mellint/identities.hpp"
#include "mellint/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mellint;

constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;
constexpr int kExitError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::optional<int> digits;
  std::optional<std::string> tol;
  std::optional<int> level_cap;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("expected name=value, got '" + text + "'");
  return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(key + " must be an integer, got '" + value + "'");
}

// key=value lines; '#' starts a comment.
Settings read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  Settings s;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto [key, value] = split_assignment(line);
    if (key == "digits") {
      s.digits = parse_int(key, value);
    } else if (key == "tol") {
      s.tol = value;
    } else if (key == "level_cap") {
      s.level_cap = parse_int(key, value);
    } else {
      throw UsageError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return s;
}

PrecisionContext make_context(const Settings& config, const Settings& flags) {
  const int digits = flags.digits.value_or(config.digits.value_or(PrecisionContext::kDefaultDigits));
  if (digits < PrecisionContext::kMinDigits) {
    throw UsageError("digits must be at least " + std::to_string(PrecisionContext::kMinDigits));
  }
  PrecisionContext ctx(digits);
  if (auto cap = flags.level_cap ? flags.level_cap : config.level_cap) ctx = ctx.with_level_cap(*cap);
  if (auto tol = flags.tol ? flags.tol : config.tol) ctx = ctx.with_pass_tol(ctx.parse(*tol));
  return ctx;
}

IdentityId parse_id(const std::string& text) {
  if (auto id = parse_identity_id(text)) return *id;
  throw UsageError("unknown identity '" + text + "'; run `mellint list`");
}

ParamMap parse_params(const std::vector<std::string>& assignments, const PrecisionContext& ctx) {
  ParamMap out;
  for (const auto& text : assignments) {
    auto [name, value] = split_assignment(text);
    out[name] = ctx.parse(value);
  }
  return out;
}

std::string report_text(const VerificationReport& r) {
  const int d = r.digits_used + 5;
  std::ostringstream os;
  os << to_string(r.id) << (r.passed ? "  PASS" : "  FAIL") << '\n';
  for (const auto& [name, value] : r.params) os << "  " << name << " = " << value.to_string(d) << '\n';
  os << "  lhs     " << r.lhs_value.to_string(d) << '\n'
     << "  rhs     " << r.rhs_value.to_string(d) << '\n'
     << "  abs_err " << r.abs_err.to_string(6) << '\n'
     << "  rel_err " << r.rel_err.to_string(6) << '\n'
     << "  quad_err_estimate " << r.err_estimate.to_string(6) << '\n'
     << "  digits " << r.digits_used << ", " << r.wall_ms << " ms\n";
  return os.str();
}

std::string render(const std::vector<VerificationReport>& reports, const std::string& format) {
  if (format == "text") {
    std::string out;
    for (const auto& r : reports) out += report_text(r);
    return out;
  }
  return export_reports(reports, *parse_report_format(format));
}

int cmd_list() {
  for (const auto& row : list_identities()) {
    std::cout << to_string(row.id) << "  [" << row.method << "]\n"
              << "  lhs: " << row.lhs << '\n'
              << "  rhs: " << row.rhs << '\n';
    for (const auto& p : row.params) {
      std::cout << "  param " << p.describe();
      if (!p.default_value.empty()) std::cout << ", default " << p.default_value;
      std::cout << '\n';
    }
    if (!row.notes.empty()) std::cout << "  note: " << row.notes << '\n';
  }
  return 0;
}

// "lo:hi:steps"
std::tuple<BigReal, BigReal, unsigned> parse_range(const std::string& text, const PrecisionContext& ctx) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("--range expects lo:hi:steps, got '" + text + "'");
  const int steps = parse_int("steps", text.substr(c2 + 1));
  if (steps < 0) throw UsageError("steps must be nonnegative");
  return {ctx.parse(text.substr(0, c1)), ctx.parse(text.substr(c1 + 1, c2 - c1 - 1)),
          static_cast<unsigned>(steps)};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision verification of multiple elliptic integral identities"};
  app.require_subcommand(1);

  std::string config_path;
  Settings flags;
  app.add_option("--config", config_path, "key=value file with digits, tol, level_cap")
      ->envname("MELLINT_CONFIG");

  auto add_precision_flags = [&flags](CLI::App* sub) {
    sub->add_option("--digits", flags.digits, "decimal digits of working precision (>= 30)");
    sub->add_option("--tol", flags.tol, "pass tolerance, overrides 10^-(digits-15)");
    sub->add_option("--level-cap", flags.level_cap, "quadrature level cap");
  };

  auto* list = app.add_subcommand("list", "show the identity catalog");

  std::string verify_id;
  std::vector<std::string> verify_params;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "verify one identity");
  verify_cmd->add_option("id", verify_id, "identity id, e.g. I1 or I1-ext")->required();
  verify_cmd->add_option("--param", verify_params, "parameter as name=value (repeatable)");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json", "csv"}));
  add_precision_flags(verify_cmd);

  std::string sweep_id;
  std::string sweep_param;
  std::string sweep_range;
  std::vector<std::string> sweep_fixed;
  std::string sweep_out;
  std::string sweep_format = "csv";
  auto* sweep_cmd = app.add_subcommand("sweep", "verify over a uniform parameter grid");
  sweep_cmd->add_option("id", sweep_id, "identity id")->required();
  sweep_cmd->add_option("--param", sweep_param, "parameter to sweep")->required();
  sweep_cmd->add_option("--range", sweep_range, "lo:hi:steps, endpoints included")->required();
  sweep_cmd->add_option("--set", sweep_fixed, "fixed parameter as name=value (repeatable)");
  sweep_cmd->add_option("--out", sweep_out, "write the report here instead of stdout");
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"text", "json", "csv"}));
  add_precision_flags(sweep_cmd);

  bool quick = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");
  selftest_cmd->add_flag("--quick", quick, "digits = 30");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list();

    if (selftest_cmd->parsed()) {
      bool all = true;
      for (const auto& r : run_selftest(quick)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  (" << r.checks << " checks, " << r.wall_ms
                  << " ms)";
        if (!r.passed) std::cout << "  " << r.detail;
        std::cout << '\n';
        all = all && r.passed;
      }
      return all ? 0 : kExitFailed;
    }

    const Settings config = config_path.empty() ? Settings{} : read_config(config_path);
    const PrecisionContext ctx = make_context(config, flags);

    if (verify_cmd->parsed()) {
      const IdentityId id = parse_id(verify_id);
      const VerificationReport report = verify(id, parse_params(verify_params, ctx), ctx);
      std::cout << render({report}, verify_format);
      return report.passed ? 0 : kExitFailed;
    }

    if (sweep_cmd->parsed()) {
      const IdentityId id = parse_id(sweep_id);
      const auto [lo, hi, steps] = parse_range(sweep_range, ctx);
      const auto reports = sweep(id, sweep_param, lo, hi, steps, parse_params(sweep_fixed, ctx), ctx);
      write_output(render(reports, sweep_format), sweep_out);
      const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
      return all ? 0 : kExitFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "mellint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "mellint: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

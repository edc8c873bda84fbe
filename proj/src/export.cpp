#include "mellint/export.hpp"

#include "mellint/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace mellint {

namespace {

int report_digits(const VerificationReport& r) { return r.digits_used + 10; }

std::string wall_ms_string(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string params_joined(const VerificationReport& r) {
  std::string out;
  for (const auto& [name, value] : r.params) {
    if (!out.empty()) out += ';';
    out += name + "=" + value.to_string(report_digits(r));
  }
  return out;
}

std::string to_json(std::span<const VerificationReport> reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    const int d = report_digits(r);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value.to_string(d);
    doc.push_back({{"id", std::string(to_string(r.id))},
                   {"params", std::move(params)},
                   {"lhs", r.lhs_value.to_string(d)},
                   {"rhs", r.rhs_value.to_string(d)},
                   {"abs_err", r.abs_err.to_string(d)},
                   {"rel_err", r.rel_err.to_string(d)},
                   {"passed", r.passed},
                   {"digits", std::to_string(r.digits_used)},
                   {"wall_ms", wall_ms_string(r.wall_ms)}});
  }
  return doc.dump(2) + "\n";
}

std::string to_csv(std::span<const VerificationReport> reports) {
  std::ostringstream os;
  os << "id,params,lhs,rhs,abs_err,rel_err,passed,digits,wall_ms\n";
  for (const auto& r : reports) {
    const int d = report_digits(r);
    os << to_string(r.id) << ',' << params_joined(r) << ',' << r.lhs_value.to_string(d) << ','
       << r.rhs_value.to_string(d) << ',' << r.abs_err.to_string(d) << ',' << r.rel_err.to_string(d) << ','
       << (r.passed ? "true" : "false") << ',' << r.digits_used << ',' << wall_ms_string(r.wall_ms) << '\n';
  }
  return os.str();
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  return std::nullopt;
}

std::string export_reports(std::span<const VerificationReport> reports, ReportFormat format) {
  if (reports.empty()) throw DomainError("nothing to export: report list is empty");
  return format == ReportFormat::json ? to_json(reports) : to_csv(reports);
}

}  // namespace mellint

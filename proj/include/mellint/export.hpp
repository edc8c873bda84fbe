#pragma once

#include "mellint/identities.hpp"

#include <span>
#include <string>
#include <string_view>

namespace mellint {

enum class ReportFormat { json, csv };

/// "json" / "csv"; nullopt otherwise.
[[nodiscard]] std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Serialises reports with the columns
///   id, params, lhs, rhs, abs_err, rel_err, passed, digits, wall_ms.
/// Numbers are decimal strings carrying the report's digits plus ten guard
/// digits; complex values print as "re+imi". JSON is an array of objects
/// with `params` a name -> string object and `passed` a boolean. CSV has a
/// header row, LF line endings and params joined as "a=...;b=...".
/// Throws DomainError for an empty list.
[[nodiscard]] std::string export_reports(std::span<const VerificationReport> reports, ReportFormat format);

}  // namespace mellint

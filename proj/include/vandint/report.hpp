#ifndef VANDINT_REPORT_HPP
#define VANDINT_REPORT_HPP

#include <span>
#include <string>

#include <json.hpp>

#include "vandint/identity.hpp"

namespace vandint {

using Json = nlohmann::ordered_json;

/// Exact values render as "p/q" strings, polynomials in their text form,
/// floating values as JSON numbers.
Json to_json(const ReportValue& value);

/// {name, n, passed, lhs, rhs, abs_err, rel_err, tolerance, seed, config}
Json to_json(const IdentityReport& report);

/// Fixed column order mirroring the JSON keys, config flattened.
std::string csv_header();
std::string to_csv_row(const IdentityReport& report);

/// One human-readable line.
std::string to_text_line(const IdentityReport& report);

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& name);

/// Serializes a list of reports: a JSON array, a CSV table or text lines.
std::string render_reports(std::span<const IdentityReport> reports, OutputFormat format);

}  // namespace vandint

#endif

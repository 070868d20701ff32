#pragma once

#include <string>
#include <string_view>

#include "ivq/analysis.hpp"

namespace ivq {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct ReportDocument {
  std::string subject;
  AnalysisReport report;
  std::string tool_version{kToolVersion};
  std::string input_digest;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

enum class ReportFormat { human, structured };

/// "fnv1a64:" followed by 16 hex digits.
std::string input_digest(std::string_view bytes);

// Structured form is a JSON object with keys subject, tool_version,
// input_digest, order, connected, faithful, latin, medial, balanced, simple,
// lmlt_order, dis_order, lmlt_derived_order (null when unknown),
// orbit_count and cycle_lengths (one array per basepoint). Keys are sorted.
// Human form has one `key: value` line per field and one
// `cycle_lengths[e]: ...` line per basepoint.
std::string emit_report(const ReportDocument& doc, ReportFormat format);
/// Accepts either format; throws SyntaxError on malformed input.
ReportDocument parse_report(std::string_view text);

}  // namespace ivq

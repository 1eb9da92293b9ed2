#pragma once

#include <string>

#include "qmetric/analyze.hpp"
#include "qmetric/config.hpp"

namespace qmetric {

inline constexpr int kReportSchemaVersion = 1;

/// Text is a human-readable table; Json is the versioned schema (`"v": 1`)
/// with 2-decimal numbers and `*_exact` [numerator, denominator] pairs.
/// Output is byte-identical for identical reports.
std::string emit_report(const AnalysisReport& report, ReportFormat format);

}  // namespace qmetric

#pragma once

#include <string>
#include <vector>

#include "dsum/verifier/bench.hpp"
#include "dsum/verifier/verify.hpp"

namespace dsum {

/// One JSON object per report. Rationals travel as "num/den" strings and the
/// point keeps its parameter order. Without timing the output is a pure
/// function of the entry, grid and tolerance.
std::string report_to_json(const VerificationReport& report, bool with_timing = true);
/// Inverse of report_to_json; throws Error(MalformedGrid) on bad input.
VerificationReport report_from_json(const std::string& text);

/// {"reports": [...], "summary": {...}}.
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing = true);

std::string bench_to_json(const std::vector<BenchRecord>& records);

}  // namespace dsum

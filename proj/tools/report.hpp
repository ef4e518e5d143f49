#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyface/numbers.hpp"

namespace polyface::cli {

/// One check line. Exact results fill `exact` (rational string); stochastic
/// results fill `estimate`/`std_error` and always embed N, seed, and the
/// resampled count in `inputs`. `pass` is "yes", "no", "skip", or empty for
/// informational rows. Fields never contain commas or newlines.
struct ReportRow {
  std::string check;
  std::string inputs;
  std::string exact;
  std::string estimate;
  std::string std_error;
  std::string target;
  std::string zscore;
  std::string pass;

  bool operator==(const ReportRow&) const = default;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<ReportRow> rows;
  uint64_t seed = 0;
  std::string version = std::string(kVersion);

  int failures() const;
};

std::string render_csv(const Report& report);

/// Parses the row table of a CSV report (header + rows). Round-trips:
/// render_csv(parse_csv(text)) reproduces the row table byte for byte.
Report parse_csv(const std::string& text);

std::string render_json(const Report& report);

/// Deterministic float formatting shared by all report writers.
std::string format_double(double v);

}  // namespace polyface::cli

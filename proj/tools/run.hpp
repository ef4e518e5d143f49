#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace polyface::cli {

/// Configuration or flag errors: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntRange {
  long lo = 0;
  long hi = 0;
};

/// "7", "4..9", or (where a list is meaningful) "100,1000,10000".
std::vector<long> parse_int_list(const std::string& text);
IntRange parse_range(const std::string& text);

struct RunConfig {
  std::string command;     // tabulate | verify | estimate | bounds | tightness
  std::string subcommand;  // lemma31 | gale | prop43 | remark | euler | phi | ...
  std::optional<std::string> d, n, k;  // raw range strings
  uint64_t samples = 100000;
  uint64_t seed = 0;
  double tolerance = 1e-9;
  std::optional<std::string> subspace;  // "e3,e4" or a basis file path
  std::optional<std::string> polytope;  // fixture name or file path
  std::string format = "csv";
  std::string out;
  std::optional<Int> m, f0, fd1, fk;
  bool improved = false;
  int face_dim = 0;
  int face_index = 0;
};

struct RunResult {
  Report report;
  int exit_code = 0;  // 0 pass, 1 check failure (2 = usage, via exceptions)
};

RunResult run_command(const RunConfig& cfg);

}  // namespace polyface::cli

#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "kov/report.hpp"

namespace kov {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;     // correctness verdict (deterministic)
  std::string detail;    // one-line summary
  json data;             // deterministic evidence for the report
  double seconds = 0;    // wall time, not part of the report
  double limit_seconds = 0;
  bool within_limit() const { return limit_seconds <= 0 || seconds < limit_seconds; }
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Criteria known to fail; they do not make the run fail.
  std::set<int> expect_fail;
  /// Called after each criterion (for streaming output).
  std::function<void(const CriterionResult&)> on_result;
};

struct AcceptanceRun {
  std::vector<CriterionResult> results;
  json report;  // deterministic: no timings
  /// Every criterion passes within its time limit, except those listed in
  /// expect_fail, which must fail.
  bool ok = false;
};

/// Runs criteria 1-10. Criterion 10 repeats 1-9 with the same seed (and a
/// different job count) and compares the serialized reports byte for byte.
AcceptanceRun run_acceptance(const AcceptanceOptions& opts);

/// "criterion 3: PASS  <detail>  (0.41 s)" with an "[expected failure]" tag.
std::string format_line(const CriterionResult& r, const std::set<int>& expect_fail);

}  // namespace kov

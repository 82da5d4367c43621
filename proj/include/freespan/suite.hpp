#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "freespan/tspace.hpp"

namespace freespan {

/// Options for a verification-suite run.
struct SuiteOptions {
  Budget budget;
  /// When set, each check runs only the pinned instances at this prime.
  std::optional<std::uint32_t> p_override;
  std::uint64_t seed = 1729;
  /// Enables the stretch variant of the three-factor product check, which is
  /// expected to exhaust its budget at default limits.
  bool stretch = false;
  /// Attach membership certificates and re-verify each one by re-expansion.
  bool certificates = false;
};

/// One membership query performed by the suite, kept in memory so callers
/// can re-verify certificates independently of the JSON report.
struct MembershipRecord {
  std::string check_id;
  std::string name;
  Polynomial target;
  std::string family;  // family syntax, re-parseable
  MembershipStatus expected;
  MembershipVerdict verdict;
  bool certificate_verified = false;
};

struct SuiteResult {
  /// Deterministic report: identical inputs yield byte-identical dumps.
  /// Wall-clock data lives in `timings_ms`, never inside the report.
  nlohmann::ordered_json report;
  std::map<std::string, std::uint64_t> timings_ms;
  std::vector<MembershipRecord> records;
  bool all_passed = false;
  bool any_budget_skipped = false;
};

/// All check ids in run order (C2.1a ... C5.6, plus the stretch variant when
/// requested).
std::vector<std::string> all_check_ids(bool include_stretch = false);

/// Runs the selected checks (empty selection = the full roster, which
/// includes the stretch check only when options.stretch is set).  A single
/// failing check never aborts the batch.  Unknown ids raise usage_error.
SuiteResult run_suite(const std::vector<std::string>& selection,
                      const SuiteOptions& options = {});

/// Human-readable one-line-per-check table of a suite report.
std::string report_table(const nlohmann::ordered_json& report);

}  // namespace freespan

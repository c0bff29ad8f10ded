#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coringlab {

/// One verdict line of a command report.
struct ReportRow {
  std::string name;
  std::string verdict;  // "pass" | "fail" | "undecided"
  std::string detail;
};

/// Machine- and human-renderable command outcome.  Deterministic for a
/// given fixture and seed; wall time is reported only on request so that
/// default output stays byte-identical across runs.
struct Report {
  std::string command;
  std::string fixture;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;

  void pass(const std::string& name, const std::string& detail = "");
  void fail(const std::string& name, const std::string& detail = "");
  void check(const std::string& name, bool ok, const std::string& detail = "");
  void undecided(const std::string& name, const std::string& detail = "");

  bool all_passed() const;
  /// 0 all pass, 1 any fail, 3 undecided (and no failure).
  int exit_code() const;

  std::string text(double wall_ms = -1) const;
  std::string json(double wall_ms = -1) const;
};

}  // namespace coringlab

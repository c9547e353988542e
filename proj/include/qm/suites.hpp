#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qm/config.hpp"

namespace qm {

struct CheckRecord {
  std::string id;      // "<suite>/<check>"
  std::string anchor;  // the statement being checked
  std::string instance;
  nlohmann::json parameters = nlohmann::json::object();
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string witness;  // concrete word or pair for failures
};

struct SuiteReport {
  std::string instance;
  std::uint64_t seed = 0;
  double wall_seconds = 0;
  std::vector<CheckRecord> records;

  bool passed() const;
  int failures() const;
  /// Timing is left out unless asked for, so that reports for a fixed
  /// config and seed are byte-identical.
  nlohmann::json to_json(bool with_timing = false) const;
  /// Columns check_id,anchor,instance,parameters,expected,actual,pass,witness.
  void write_csv(std::ostream& os) const;
};

/// Every suite name, in run order.
const std::vector<std::string>& suite_names();
bool suite_applies(std::string_view name, const Instance& inst);
std::vector<std::string> applicable_suites(const Instance& inst);

/// Runs the named suites with inst.caps. Throws ValidationError for unknown
/// names or suites that do not apply to the instance kind. Suites keep
/// going after a failed check.
SuiteReport run_suites(const Instance& inst, const std::vector<std::string>& names);

}  // namespace qm

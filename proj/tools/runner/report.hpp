#pragma once

#include <string>
#include <vector>

namespace berglab {

/// One named check of an experiment run.  `threshold` is the bound the value
/// was held to; the comparison direction is baked into `pass` (the check
/// name says which way it went).
struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// The complete record of one experiment run.  Checks are append-only: the
/// recording helpers push and never mutate, so a report read mid-run is a
/// prefix of the final one.
struct RunReport {
  std::string experiment_id;
  std::string config_text;  // canonical serialized config, echoed verbatim
  std::vector<CheckResult> checks;
  std::vector<std::string> artifacts;  // files written next to the report
  double wall_seconds = 0.0;

  /// Conjunction over all checks; an empty report has nothing passing.
  bool overall() const;

  void check_le(const std::string& name, double value, double threshold);
  void check_ge(const std::string& name, double value, double threshold);
  void check_true(const std::string& name, bool ok);
};

/// 17-significant-digit decimal form (%.17g): enough digits that a reprint
/// of the parsed value is bit-identical, so run outputs diff cleanly.
std::string fmt17(double v);

/// The report as a JSON document.  All floating-point fields go through
/// fmt17; the schema is flat (no nested experiment-specific payloads --
/// those live in the CSV artifacts).
std::string report_to_json(const RunReport& rep);

}  // namespace berglab

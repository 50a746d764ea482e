#pragma once

#include <string>
#include <vector>

namespace leibcx {

/// One verified statement. `witness` names the first counterexample found.
/// Informational entries record an observation and never fail a run.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::string witness;
  bool informational = false;
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed && !c.informational) return false;
  }
  return true;
}

}  // namespace leibcx

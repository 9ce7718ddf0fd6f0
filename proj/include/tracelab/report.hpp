#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tracelab {

/// One violated structural law, with the basis indices that witness it.
struct Violation {
  std::string law;
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  void add(std::string law, std::vector<std::size_t> indices, std::string detail = {}) {
    violations.push_back({std::move(law), std::move(indices), std::move(detail)});
  }
  [[nodiscard]] bool mentions(const std::string& law, const std::vector<std::size_t>& idx) const {
    for (const auto& v : violations)
      if (v.law == law && v.indices == idx) return true;
    return false;
  }
};

/// Outcome of one named check inside a verification suite.
struct CheckResult {
  std::string suite;
  std::string check;
  std::string subject;
  bool passed = false;
  std::string detail;
  bool skipped = false;  ///< not applicable; does not count as a failure
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool ok() const noexcept {
    for (const auto& c : checks)
      if (!c.passed && !c.skipped) return false;
    return true;
  }
  void add(std::string suite, std::string check, std::string subject, bool passed,
           std::string detail = {}) {
    checks.push_back(
        {std::move(suite), std::move(check), std::move(subject), passed, std::move(detail)});
  }
  void skip(std::string suite, std::string check, std::string subject, std::string reason) {
    checks.push_back({std::move(suite), std::move(check), std::move(subject), false,
                      "skipped: " + std::move(reason), true});
  }
  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace tracelab

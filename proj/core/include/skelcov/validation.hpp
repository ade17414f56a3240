#pragma once

#include <string>
#include <vector>

namespace skelcov {

/// A single invariant violation. Violations are data, not failures: every
/// validate_* operation returns a (possibly empty) report instead of throwing.
struct Violation {
  std::string code;    // stable machine-readable tag, e.g. "loop-edge"
  std::string detail;  // human-readable description naming the offending item
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string code, std::string detail) {
    violations.push_back({std::move(code), std::move(detail)});
  }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  bool has(const std::string& code) const {
    for (const auto& v : violations)
      if (v.code == code) return true;
    return false;
  }
};

}  // namespace skelcov

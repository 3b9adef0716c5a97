#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tcurv {

/// Raised when a computed quantity contradicts an identity the implementation
/// relies on (a bug, not a property of the curve).
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One named pass/fail entry. `residual` is the worst observed deviation (or
/// margin, for inequality checks); `detail` is free-form context.
struct Check {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

/// Ordered list of checks. Report-producing operations never throw on a
/// failed check; callers decide what to do with the outcome.
class ValidationReport {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  void add(std::string name, bool passed, double residual,
           std::string detail = {}) {
    checks_.push_back({std::move(name), passed, residual, std::move(detail)});
  }
  void append(const ValidationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool all_passed() const;
  std::size_t failures() const;
  std::size_t size() const { return checks_.size(); }
  bool empty() const { return checks_.empty(); }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;

  /// "PASS name residual=... detail" lines.
  std::string to_text() const;
  /// check.<i>.name=..., check.<i>.passed=..., check.<i>.residual=... lines.
  std::string to_key_values() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace tcurv

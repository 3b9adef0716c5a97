#include "tcurv/report.hpp"

#include <algorithm>

#include "tcurv/format.hpp"

namespace tcurv {

bool ValidationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check& c) { return c.passed; });
}

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(),
                    [](const Check& c) { return !c.passed; }));
}

const Check* ValidationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    out += " residual=";
    out += format_real(c.residual);
    if (!c.detail.empty()) {
      out += ' ';
      out += c.detail;
    }
    out += '\n';
  }
  return out;
}

std::string ValidationReport::to_key_values() const {
  std::string out;
  for (std::size_t i = 0; i < checks_.size(); ++i) {
    const auto& c = checks_[i];
    const std::string key = "check." + std::to_string(i) + '.';
    out += key + "name=" + c.name + '\n';
    out += key + "passed=" + (c.passed ? "true" : "false") + '\n';
    out += key + "residual=" + format_real(c.residual) + '\n';
    if (!c.detail.empty()) out += key + "detail=" + c.detail + '\n';
  }
  out += "checks=" + std::to_string(checks_.size()) + '\n';
  out += "failures=" + std::to_string(failures()) + '\n';
  return out;
}

}  // namespace tcurv

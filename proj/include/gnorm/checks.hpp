#pragma once

#include <string>
#include <vector>

namespace gnorm {

struct Check {
  std::string name;
  bool ok = false;
  std::string note;
};

struct CheckReport {
  std::vector<Check> checks;

  void add(const std::string& name, bool ok, const std::string& note = "") {
    checks.push_back({name, ok, note});
  }
  bool ok() const {
    for (const Check& c : checks)
      if (!c.ok) return false;
    return true;
  }
  int failed() const {
    int n = 0;
    for (const Check& c : checks) n += c.ok ? 0 : 1;
    return n;
  }
};

}  // namespace gnorm

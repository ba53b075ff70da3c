// Lightweight pass/fail certificates shared by the algebra, Lie and stability
// layers.  A certificate is a named list of checks; the CLI renders it as text
// and JSON, the test suites assert all_pass().

#pragma once

#include <string>
#include <vector>

namespace g2oct::certify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // value witnessed, expected value, etc.
};

struct Certificate {
  std::string title;
  std::vector<Check> checks;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }
  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const Check& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
};

}  // namespace g2oct::certify

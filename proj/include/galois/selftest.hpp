#pragma once

#include <functional>
#include <string>
#include <vector>

namespace galois {

  struct SuiteResult {
    std::string name;
    bool        passed = false;
    std::string detail;  // first failure, or a count of cases checked
  };

  // The invariant suites, small enough to run in a few seconds.
  std::vector<SuiteResult> run_selftest(
      std::function<void(SuiteResult const&)> const& on_result = {});

}  // namespace galois

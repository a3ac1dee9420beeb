#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "twistbaker/map_core.hpp"

namespace twistbaker::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Property suites behind `verify`: lemmas, theoremA .. theoremD, all.
bool is_suite(const std::string& name);

// Prints one "PASS|FAIL name: detail" line per check and returns the results.
std::vector<CheckResult> run_suite(const std::string& suite, Dimension dim, std::size_t max_period,
                                   unsigned workers, std::ostream& out);

}  // namespace twistbaker::cli

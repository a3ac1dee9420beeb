#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twistbaker::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kResource = 3,
  kInvariant = 4,
};

// Runs one CLI invocation; args excludes the program name. Reports go to
// `out` unless --out is given, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistbaker::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace helly::cli {

enum ExitCode {
  kOk = 0,
  kInternalError = 1,  // also: a theorem violation was found
  kHypothesesNotSatisfied = 2,
  kInputError = 3,
  kDegenerateInput = 4,
};

// Runs one helly-topo command. `args` excludes the program name. JSON goes
// to `out` (or the --out file), the human summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace helly::cli

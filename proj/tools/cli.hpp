#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfermat::cli {

enum ExitCode : int {
  kTrue = 0,          // computed; predicate holds (or no predicate)
  kFalse = 1,         // computed; predicate does not hold
  kInputError = 2,
  kCapacityError = 3,
};

/// Runs one command. args excludes the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfermat::cli

#pragma once

// The `singspec` command-line front end, callable in-process.

#include <ostream>
#include <string>
#include <vector>

namespace singspec::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  ///< an inequality or a catalog comparison failed
  kParseError = 2,   ///< bad polynomial, spectrum file or command line
  kNotIsolated = 3,  ///< infinite colength or reduction budget exhausted
  kDegenerate = 4,   ///< Newton non-degeneracy unresolved
  kDomainError = 5,  ///< argument outside the supported domain
  kUnknownFamily = 6,
};

/// Runs the CLI on `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singspec::cli

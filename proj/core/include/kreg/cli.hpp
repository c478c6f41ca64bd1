#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kreg {

/// Command-line entry point.  `args` excludes the program name.
/// Exit codes: 0 success/PASSED, 1 certified counterexample or infeasible
/// request, 2 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kreg

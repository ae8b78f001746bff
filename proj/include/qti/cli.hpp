#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qti {

// Runs one CLI invocation (args exclude the program name) against the given
// output/error streams.  Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 resource guard.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qti

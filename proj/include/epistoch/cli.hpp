#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epistoch {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit code: 0 success, 2 invalid input or arguments, 3 numerical
// failure. All output goes to the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epistoch

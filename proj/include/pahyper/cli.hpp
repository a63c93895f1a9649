#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pahyper {

/// Command-line entry point. args[0] is the program name.
/// Exit codes: 0 success, 1 runtime error, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pahyper

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace descmat {

/// Runs the command-line front end on already-split arguments (no program
/// name). Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descmat

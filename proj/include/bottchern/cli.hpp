#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bc {

// Runs one command line (without argv[0]).  All report text goes to out, all
// diagnostics to err.  Exit codes: 0 success, 1 parse/validation/usage error,
// 2 undefined Massey product, 3 budget or weight-window overflow.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bc

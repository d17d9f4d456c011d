#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkz::cli {

/// Runs one command line (without the program name). Results go to `out`
/// unless --output is given; diagnostics go to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkz::cli

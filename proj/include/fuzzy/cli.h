#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzy {

/// Runs one command line (without the program name). Writes JSON to out,
/// usage problems to err. Returns 0 on success, 1 on a domain error or a
/// failed verify suite, 2 on a usage error.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzy

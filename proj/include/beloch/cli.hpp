#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beloch::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a computation fails or an oracle disagrees, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beloch::cli

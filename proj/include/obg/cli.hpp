#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obg::cli {

/// Runs one CLI invocation (argv without the program name). Exit codes:
/// 0 pass, 1 fail, 2 inconclusive, 3 usage or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace obg::cli

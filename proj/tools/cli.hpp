#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lommelkit::cli {

/// Runs the command line `args` (program name excluded). Output goes to `out`
/// unless --out is given; diagnostics go to `err`. Returns the exit code:
/// 0 success, 1 verification or numeric failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lommelkit::cli

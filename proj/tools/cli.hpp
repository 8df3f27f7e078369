#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigma::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 a property or audit failed, 2 input error. Reports go to `out` (or the
/// --out file), diagnostics to `err` as one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigma::cli

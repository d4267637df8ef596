#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altperm::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when `verify` finds a disagreeing report, 2 on parse or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altperm::cli

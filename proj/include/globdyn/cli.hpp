#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace globdyn::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on usage or validation errors and 1 on numerical failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace globdyn::cli

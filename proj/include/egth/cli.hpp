#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egth::cli {

/// Dispatches one command line (without the program name). Reports go to
/// `out`, structured error messages to `err`. Exit status: 0 success,
/// 1 invalid input or usage, 2 algorithm failure (reducible chain, singular
/// pivot), 3 reference-comparison failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egth::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monotri::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2 };

// args excludes the program name. The envelope goes to out (or --output),
// diagnostics and text-mode warnings to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monotri::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromacode::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kGuard = 3 };

// args excludes the program name. JSON goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace chromacode::cli

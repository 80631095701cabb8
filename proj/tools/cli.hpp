#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dendrispec::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInvalidInput = 2,
    kExitCapacity = 3,
};

// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dendrispec::cli

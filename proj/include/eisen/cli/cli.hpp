#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eisen::cli {

/// Process exit codes.
enum ExitCode : int {
    kPass = 0,
    kUsage = 1,
    kCapRefused = 2,
    kVerificationFailed = 3,
    kInternal = 4,
};

/// Every suite name accepted by `verify`.
const std::vector<std::string>& suite_names();

/// Runs one command line (args excludes the program name). Documents go to `out`
/// (or to --output), diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv adapter for main().
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eisen::cli

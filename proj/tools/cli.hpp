#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unialg::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kCapExceeded = 3,
};

constexpr unsigned long long kDefaultSeed = 20240611ULL;

/// Runs one invocation; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace unialg::cli

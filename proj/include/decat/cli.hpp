#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decat::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

/// Parses argv (without the program name) and runs one subcommand.
/// Returns 0 on success, 1 when a verification suite fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace decat::cli

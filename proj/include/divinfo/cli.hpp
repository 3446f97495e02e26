#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace divinfo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that, when set, is the base for relative --out paths.
inline constexpr const char* kOutputDirEnv = "DIVINFO_OUTPUT_DIR";

/// Entry point of the `divinfo` tool; `args` excludes the program name.
/// Data goes to `out` (or --out files), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace divinfo::cli

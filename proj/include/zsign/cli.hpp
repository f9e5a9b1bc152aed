#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zsign {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the output directory when --out is absent.
inline constexpr const char* kOutDirEnv = "ZSIGN_OUT_DIR";

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsign

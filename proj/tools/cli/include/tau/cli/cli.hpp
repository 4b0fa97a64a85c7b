#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tau::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming a directory that holds the default cache file.
inline constexpr const char* kCacheDirEnv = "TAU_CACHE_DIR";
inline constexpr const char* kDefaultCacheName = "tau.cache";

// Runs one command. `args` excludes the program name. Returns the exit code:
// 0 on success, 1 on domain errors, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tau::cli

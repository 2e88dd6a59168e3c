#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace locmat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// status: 0 on success, 2 on parse errors, 3 on domain errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace locmat::cli

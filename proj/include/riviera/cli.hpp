#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riviera::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitCapExceeded = 3;

inline constexpr const char* kVersion = "1.0.0";

/// Runs one job. `args` excludes the program name. Tables go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace riviera::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;

// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectral::cli

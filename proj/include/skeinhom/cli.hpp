#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skeinhom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace skeinhom::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braid2d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one command line (args[0] is the program name) and returns the exit
// status: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braid2d::cli

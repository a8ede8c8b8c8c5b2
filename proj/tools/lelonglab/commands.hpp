#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lelonglab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// args excludes the program name. Normal output goes to out, messages to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lelonglab

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artin::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kInternal = 3;

// args excludes the program name. Input "-" reads standard input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli

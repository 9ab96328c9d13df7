// Command-line front end, exposed as a library function so tests can drive
// the exact production code path without spawning processes.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgf::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kIoParse = 1;        // unreadable or malformed input
inline constexpr int kInvalid = 2;        // validation / domain failure
inline constexpr int kVertex = 3;         // vertex convergence (star regime)
inline constexpr int kNoConvergence = 4;
inline constexpr int kBadDimension = 5;
inline constexpr int kVerifyFailed = 6;

// args excludes the program name. All human/machine output goes to the
// given streams; files named by --out are written atomically.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgf::cli

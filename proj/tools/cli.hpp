#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fvskit::cli {

// Exit codes.
inline constexpr int kOk = 0;        // success / affirmative answer
inline constexpr int kNegative = 1;  // negative answer (unsat, not reducible, ...)
inline constexpr int kUsage = 2;     // usage or input format error
inline constexpr int kGuard = 3;     // search guard or enumeration limit exceeded

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fvskit::cli

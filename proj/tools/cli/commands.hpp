#pragma once

// Front end for the library: term | sum | table | verify | bench | oeis-check.
//
// Exit codes: 0 success, 1 verification or benchmark mismatch,
// 2 usage, precondition or parse error.

#include <ostream>
#include <span>
#include <string>

namespace lucas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace lucas::cli

#pragma once

#include <iosfwd>

namespace steg::cli {

// Exit codes: 0 success, 1 I/O or format error, 2 capacity or parameter
// violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitParam = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steg::cli

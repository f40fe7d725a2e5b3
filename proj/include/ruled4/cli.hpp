// Command-line front end.  Exit codes: 0 success, 2 parameter-domain error,
// 3 refusal certificate (inflate), 4 internal invariant violation.
#pragma once

#include <iosfwd>

namespace ruled4::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 2;
inline constexpr int kRefused = 3;
inline constexpr int kInvariant = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ruled4::cli

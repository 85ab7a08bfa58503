#pragma once

#include <iosfwd>

namespace hyperreg {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 1 domain error or failed verification,
// 2 budget or cost-guard exhaustion.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperreg

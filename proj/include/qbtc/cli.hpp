#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbtc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;

/// Runs the command line `args` (args[0] is the program name). Writes one JSON
/// document (or CSV rows) to `out` on success and diagnostics to `err`;
/// nothing reaches `out` on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbtc

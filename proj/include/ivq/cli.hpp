#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on domain errors (axiom violation, overflow, ...) and 2 on
/// usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivq

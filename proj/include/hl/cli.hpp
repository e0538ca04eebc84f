#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFlag = 3;

/// Runs the hlbounds command line; args excludes the program name.
/// Exit codes: 0 success, 1 bound exceeded under an exact norm,
/// 2 usage/domain error, 3 estimator flag.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace hl::cli

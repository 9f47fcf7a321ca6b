#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "f2cf/contfrac.hpp"

namespace f2cf::cli {

/// Exit codes: 0 every requested check passed, 1 some check failed, 2 bad arguments or preconditions.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Ordered pairs (a, b) of distinct polynomials of degree >= 1 with deg a + deg b <= max_total_deg.
std::vector<LetterAssignment> valid_pairs(int max_total_deg);

}  // namespace f2cf::cli

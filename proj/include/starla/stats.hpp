#pragma once

#include <span>

namespace starla {

enum class UTestMethod { automatic, exact, normal };

struct UTestResult {
    double u = 0.0;          ///< U statistic of the first sample
    double p_greater = 1.0;  ///< one-sided, alternative: first sample tends to be larger
    double p_less = 1.0;     ///< one-sided, alternative: first sample tends to be smaller
    double p_two_sided = 1.0;
    bool exact = false;
};

/// Mann-Whitney U test with midranks for ties. `automatic` enumerates the
/// exact permutation distribution when |x|*|y| <= 400 and otherwise uses the
/// tie-corrected normal approximation with continuity correction.
UTestResult mann_whitney_u(std::span<const double> x, std::span<const double> y,
                           UTestMethod method = UTestMethod::automatic);

} // namespace starla

#pragma once

namespace kswave {

/// Continuous-wave speed threshold 2 sqrt(chi (1 + chi/sigma^2)).
double c_star(double chi, double sigma);

/// Open interval of speeds for the sharp (discontinuous) wave.
struct SpeedBracket {
    double lower;  ///< sigma chi_hat / (2 + chi_hat)
    double upper;  ///< sigma chi_hat / 2
};

SpeedBracket sharp_speed_bracket(double chi, double sigma);

/// The chain c_star >= 2 chi/sigma >= chi/(2 sigma) >= sharp upper bound.
struct SpeedOrdering {
    double c_star;
    double twice_ratio;  ///< 2 chi / sigma
    double half_ratio;   ///< chi / (2 sigma)
    double sharp_upper;  ///< sigma chi_hat / 2
};

/// Evaluates the chain and throws InvariantViolation if any link fails
/// (beyond a relative rounding slack); a failure means a formula bug.
SpeedOrdering speed_ordering_check(double chi, double sigma);

/// chi_hat -> ln((2 - chi_hat)/chi_hat)
///            + 2/(2 + chi_hat) ((chi_hat/2) ln(chi_hat/2) + 1 - chi_hat/2)
/// on (0, 2); its root bounds chi_hat for the sharp-wave existence result.
double sharp_existence_function(double chi_hat);

/// Positive root of sharp_existence_function in (0, 2), to 1e-12 absolute.
/// Bisection on a bracket with a guaranteed sign change, then secant steps.
double chi_bar();

}  // namespace kswave

#include "kswave/speeds.hpp"

#include <cmath>
#include <sstream>

#include "kswave/error.hpp"

namespace kswave {

namespace {

void require_positive_pair(double chi, double sigma, const char* what) {
    if (!(chi > 0.0) || !(sigma > 0.0) || !std::isfinite(chi) || !std::isfinite(sigma)) {
        std::ostringstream msg;
        msg << what << ": chi and sigma must be positive (chi=" << chi << ", sigma=" << sigma << ")";
        throw InvalidArgument(msg.str());
    }
}

}  // namespace

double c_star(double chi, double sigma) {
    require_positive_pair(chi, sigma, "c_star");
    return 2.0 * std::sqrt(chi * (1.0 + chi / (sigma * sigma)));
}

SpeedBracket sharp_speed_bracket(double chi, double sigma) {
    require_positive_pair(chi, sigma, "sharp_speed_bracket");
    const double chi_hat = chi / (sigma * sigma);
    return {sigma * chi_hat / (2.0 + chi_hat), sigma * chi_hat / 2.0};
}

SpeedOrdering speed_ordering_check(double chi, double sigma) {
    require_positive_pair(chi, sigma, "speed_ordering_check");
    const SpeedOrdering s{c_star(chi, sigma), 2.0 * chi / sigma, chi / (2.0 * sigma),
                          sharp_speed_bracket(chi, sigma).upper};
    // chi/(2 sigma) and sigma chi_hat/2 are the same number; allow rounding.
    constexpr double slack = 1e-14;
    const auto holds = [](double big, double small) { return big >= small * (1.0 - slack); };
    if (!holds(s.c_star, s.twice_ratio) || !holds(s.twice_ratio, s.half_ratio) ||
        !holds(s.half_ratio, s.sharp_upper)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "speed ordering violated: " << s.c_star << ", " << s.twice_ratio << ", "
            << s.half_ratio << ", " << s.sharp_upper;
        throw InvariantViolation(msg.str());
    }
    return s;
}

double sharp_existence_function(double chi_hat) {
    if (!(chi_hat > 0.0 && chi_hat < 2.0)) {
        throw InvalidArgument("sharp_existence_function: argument must lie in (0, 2)");
    }
    const double half = 0.5 * chi_hat;
    return std::log((2.0 - chi_hat) / chi_hat) +
           (2.0 / (2.0 + chi_hat)) * (half * std::log(half) + 1.0 - half);
}

double chi_bar() {
    // f -> +inf at 0+ and -inf at 2-, so this bracket always changes sign.
    double lo = 1e-6;
    double hi = 2.0 - 1e-6;
    double f_lo = sharp_existence_function(lo);
    for (int k = 0; k < 60 && hi - lo > 1e-6; ++k) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = sharp_existence_function(mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    // Secant refinement from the bisection bracket.
    double x0 = lo;
    double x1 = hi;
    double f0 = sharp_existence_function(x0);
    double f1 = sharp_existence_function(x1);
    for (int k = 0; k < 50; ++k) {
        if (f1 == f0) break;
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = sharp_existence_function(x1);
        if (std::abs(x1 - x0) < 1e-15 || f1 == 0.0) break;
    }
    return x1;
}

}  // namespace kswave

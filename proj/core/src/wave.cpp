#include "kswave/wave.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kswave/error.hpp"

namespace kswave {

namespace {

// (1 - e^{-z}) / z, continuous at z = 0.
double fitted_weight(double z) {
    if (std::abs(z) < 1e-8) {
        return 1.0 - 0.5 * z + z * z / 6.0;
    }
    return -std::expm1(-z) / z;
}

std::size_t require_anchor(const Grid1D& grid) {
    const auto zero = grid.zero_index();
    if (!zero) {
        throw InvalidArgument(
            "wave grid must contain a node at x = 0 (use Grid1D::symmetric_nodes)");
    }
    return *zero;
}

}  // namespace

CoefficientFields coefficients(const PressureField& pressure, const WaveParams& wp, double chi,
                               double sigma) {
    const double chi_hat = chi / (sigma * sigma);
    const std::size_t m = pressure.p.size();
    CoefficientFields out{pressure.grid, std::vector<double>(m), std::vector<double>(m)};
    const double floor = 0.5 * wp.c - kAdmissibleTolerance;
    for (std::size_t i = 0; i < m; ++i) {
        const double denom = wp.c - chi * pressure.dp[i];
        if (!(denom >= floor)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "c - chi P' = " << denom << " below c/2 at x=" << pressure.grid[i]
                << "; source is not admissible";
            throw InvariantViolation(msg.str());
        }
        out.lam[i] = (1.0 + chi_hat * pressure.p[i]) / denom;
        out.kap[i] = (1.0 + chi_hat) / denom;
    }
    return out;
}

WaveOperatorStep wave_operator_step(const Profile& u, const WaveParams& wp, double chi,
                                    double sigma, Tails tails) {
    wp.validate(chi, sigma);
    const double slope_bound = wp.c / (2.0 * chi);
    if (!is_admissible(u, slope_bound)) {
        throw InvariantViolation("wave operator input is not admissible");
    }
    const Grid1D& grid = u.grid();
    const std::size_t anchor = require_anchor(grid);
    const std::size_t m = grid.size();
    const double h = grid.dx();

    PressureField pressure = green_convolve(u, sigma, tails);
    CoefficientFields coeff = coefficients(pressure, wp, chi, sigma);
    const auto& lam = coeff.lam;
    const auto& kap = coeff.kap;

    // Lam(x_i) = int_0^{x_i} lambda, cumulative trapezoid from the anchor.
    std::vector<double> big_lam(m, 0.0);
    for (std::size_t i = anchor; i + 1 < m; ++i) {
        big_lam[i + 1] = big_lam[i] + 0.5 * h * (lam[i] + lam[i + 1]);
    }
    for (std::size_t i = anchor; i > 0; --i) {
        big_lam[i - 1] = big_lam[i] - 0.5 * h * (lam[i] + lam[i - 1]);
    }

    std::vector<double> v(m);
    const double u0 = wp.u0;
    v[anchor] = u0;

    // x >= 0: J(x) = int_0^x kappa(s) e^{-(Lam(x)-Lam(s))} ds.
    double weighted = 0.0;
    for (std::size_t i = anchor; i + 1 < m; ++i) {
        const double step = big_lam[i + 1] - big_lam[i];
        const double kap_mean = 0.5 * (kap[i] + kap[i + 1]);
        weighted = std::exp(-step) * weighted + h * kap_mean * fitted_weight(step);
        const double denom = std::exp(-big_lam[i + 1]) + u0 * weighted;
        v[i + 1] = u0 / denom;
    }

    // x < 0: I(x) = int_x^0 kappa(s) e^{Lam(s)} ds, with Lam <= 0 there.
    double accumulated = 0.0;
    for (std::size_t i = anchor; i > 0; --i) {
        const double step = big_lam[i] - big_lam[i - 1];
        const double kap_mean = 0.5 * (kap[i] + kap[i - 1]);
        accumulated += h * kap_mean * std::exp(big_lam[i]) * fitted_weight(step);
        const double denom = 1.0 - u0 * accumulated;
        if (!(denom > 0.0)) {
            throw InvariantViolation("wave operator denominator is not positive");
        }
        v[i - 1] = u0 * std::exp(big_lam[i - 1]) / denom;
    }

    std::vector<double> dv(m);
    std::size_t flat = 0;
    for (std::size_t i = 0; i < m; ++i) {
        dv[i] = lam[i] * v[i] - kap[i] * v[i] * v[i];
        if (dv[i] < 1e-15) ++flat;
    }

    Profile next = Profile::admissible(grid, std::move(v), std::move(dv), slope_bound,
                                       AdmissibilityMode::lenient);
    return WaveOperatorStep{std::move(next), std::move(pressure), std::move(coeff), flat};
}

Profile apply_wave_operator(const Profile& u, const WaveParams& wp, double chi, double sigma,
                            Tails tails) {
    return wave_operator_step(u, wp, chi, sigma, tails).next;
}

Profile logistic_initial_profile(const Grid1D& grid, const WaveParams& wp, double chi) {
    const std::size_t m = grid.size();
    std::vector<double> u(m);
    std::vector<double> du(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double z = grid[i] / wp.c;
        // u0 e^z / (1 + u0 (e^z - 1)) written to stay finite for large |z|.
        const double value = z > 0.0 ? wp.u0 / (std::exp(-z) * (1.0 - wp.u0) + wp.u0)
                                     : wp.u0 * std::exp(z) / (1.0 + wp.u0 * std::expm1(z));
        u[i] = value;
        du[i] = value * (1.0 - value) / wp.c;
    }
    return Profile::admissible(grid, std::move(u), std::move(du), wp.c / (2.0 * chi),
                               AdmissibilityMode::lenient);
}

WaveSolution solve_profile(const WaveParams& wp, double chi, double sigma, const Profile& init,
                           const FixedPointOptions& opts) {
    wp.validate(chi, sigma);
    if (!is_admissible(init, wp.c / (2.0 * chi))) {
        throw InvalidArgument("solve_profile: initial profile is not admissible");
    }
    const Tails tails{0.0, 1.0};
    Profile current = init;
    WaveOperatorStep step = wave_operator_step(current, wp, chi, sigma, tails);
    FixedPointReport report;
    for (;;) {
        report.iterations += 1;
        report.final_distance = weighted_distance(step.next, current, wp.eta);
        report.flat_points = step.flat_points;
        current = step.next;
        if (report.final_distance < opts.tol || report.iterations >= opts.max_iter) {
            break;
        }
        step = wave_operator_step(current, wp, chi, sigma, tails);
    }

    // Pressure consistent with the returned profile.
    PressureField pressure = green_convolve(current, sigma, tails);
    report.ode_residual = verify_residual(current, pressure, wp, chi, sigma);
    report.left_tail = current.u().front();
    report.right_gap = 1.0 - current.u().back();
    report.converged = report.final_distance < opts.tol && std::isfinite(report.ode_residual) &&
                       report.left_tail < opts.tail_tolerance &&
                       report.right_gap < opts.tail_tolerance;
    return WaveSolution{std::move(current), std::move(pressure), report};
}

double verify_residual(const Profile& u, const PressureField& p, const WaveParams& wp, double chi,
                       double sigma) {
    require_same_grid(u.grid(), p.grid, "verify_residual");
    const double chi_hat = chi / (sigma * sigma);
    const auto val = u.u();
    const auto der = u.du();
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < val.size(); ++i) {
        const double lhs = (wp.c - chi * p.dp[i]) * der[i];
        const double rhs = val[i] * ((1.0 + chi_hat * p.p[i]) - (1.0 + chi_hat) * val[i]);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

Profile reflect(const Profile& u) {
    const Grid1D& grid = u.grid();
    if (std::abs(grid.x_min() + grid.x_max()) > 1e-9 * grid.dx()) {
        throw InvalidArgument("reflect: grid must be symmetric about 0");
    }
    std::vector<double> val(u.u().rbegin(), u.u().rend());
    std::vector<double> der(u.du().rbegin(), u.du().rend());
    for (double& d : der) d = -d;
    const Orientation flipped = u.orientation() == Orientation::increasing ? Orientation::decreasing
                                                                          : Orientation::increasing;
    return Profile(grid, std::move(val), std::move(der), flipped);
}

Profile export_wave(const Profile& u) {
    if (u.orientation() != Orientation::increasing) {
        throw InvalidArgument("export_wave expects an increasing-orientation profile");
    }
    return reflect(u);
}

}  // namespace kswave

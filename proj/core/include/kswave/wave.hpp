#pragma once

#include <cstddef>
#include <vector>

#include "kswave/elliptic.hpp"
#include "kswave/grid.hpp"
#include "kswave/params.hpp"
#include "kswave/profile.hpp"

namespace kswave {

// Pointwise rate lambda(x) = (1 + chi_hat P) / (c - chi P') and capacity
// kappa(x) = (1 + chi_hat) / (c - chi P') of the frozen-coefficient logistic
// ODE U' = lambda U - kappa U^2.
struct CoefficientFields {
    Grid1D grid;
    std::vector<double> lam;
    std::vector<double> kap;
};

// Throws InvariantViolation if c - chi P' drops below c/2 by more than the
// admissibility tolerance (the pressure did not come from an admissible source).
CoefficientFields coefficients(const PressureField& pressure, const WaveParams& wp, double chi,
                               double sigma);

// Everything produced by one application of the wave operator.
struct WaveOperatorStep {
    Profile next;
    PressureField pressure;
    CoefficientFields coeff;
    std::size_t flat_points;  // grid points where V' < 1e-15
};

// The wave operator: pressure of `u`, coefficients, then the explicit
// solution V of V' = lambda V - kappa V^2 with V(0) = u0,
//
//   V(x) = u0 e^{Lam(x)} / (1 + u0 int_0^x kappa e^{Lam}),  Lam(x) = int_0^x lambda,
//
// evaluated for x >= 0 in the equivalent form
//   V(x) = u0 / (e^{-Lam(x)} + u0 int_0^x kappa(s) e^{-(Lam(x)-Lam(s))} ds)
// so that no exponential argument is positive. Lam is a cumulative trapezoid;
// the outer integral uses the same Lam values with an exponentially fitted
// rule (segment-mean kappa times the exact integral of e^{Lam} for linear
// Lam), which is exact for constant coefficients and keeps V(0) = u0 exact.
// V' comes from the ODE form.
//
// Requires a grid node at x = 0, an admissible `u` and valid `wp`.
WaveOperatorStep wave_operator_step(const Profile& u, const WaveParams& wp, double chi,
                                    double sigma, Tails tails = {});

Profile apply_wave_operator(const Profile& u, const WaveParams& wp, double chi, double sigma,
                            Tails tails = {});

// The shifted logistic u0 e^{x/c} / (1 + u0 (e^{x/c} - 1)) and its derivative,
// used as the first iterate.
Profile logistic_initial_profile(const Grid1D& grid, const WaveParams& wp, double chi);

struct FixedPointOptions {
    double tol = 1e-10;
    std::size_t max_iter = 500;
    double tail_tolerance = 1e-3;  // U(x_min) and 1 - U(x_max) limits
};

struct FixedPointReport {
    std::size_t iterations = 0;
    double final_distance = 0.0;  // weighted distance between the last two iterates
    double ode_residual = 0.0;
    double left_tail = 0.0;       // U(x_min)
    double right_gap = 0.0;       // 1 - U(x_max)
    std::size_t flat_points = 0;
    bool converged = false;
};

struct WaveSolution {
    Profile profile;
    PressureField pressure;
    FixedPointReport report;
};

// Iterates U <- wave operator(U) from `init` until the weighted distance
// between successive iterates drops below opts.tol. Non-convergence is
// reported through report.converged; invariant breaches throw.
// Convergence also requires the tail limits to hold within tail_tolerance.
WaveSolution solve_profile(const WaveParams& wp, double chi, double sigma, const Profile& init,
                           const FixedPointOptions& opts = {});

// sup over interior nodes of
//   |(c - chi P') U' - U ((1 + chi_hat P) - (1 + chi_hat) U)|.
double verify_residual(const Profile& u, const PressureField& p, const WaveParams& wp, double chi,
                       double sigma);

// x -> -x: samples reversed, derivative negated, orientation flipped.
// The grid must be symmetric about 0.
Profile reflect(const Profile& u);

// Turns a solved (increasing) profile into the physical wave orientation:
// 1 behind the front, 0 ahead. Throws InvalidArgument for a decreasing input.
Profile export_wave(const Profile& u);

}  // namespace kswave

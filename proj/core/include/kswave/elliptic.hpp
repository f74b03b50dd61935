#pragma once

#include <span>
#include <vector>

#include "kswave/grid.hpp"
#include "kswave/profile.hpp"

namespace kswave {

// Pressure P and its derivative P' sampled on a grid.
struct PressureField {
    Grid1D grid;
    std::vector<double> p;
    std::vector<double> dp;
};

// Constant values of the source outside the sampled window.
struct Tails {
    double left = 0.0;
    double right = 1.0;
};

// Whole-line solution of P - sigma^2 P'' = U by convolution with the
// kernel e^{-|y|/sigma} / (2 sigma).
//
// Inside the grid the kernel is integrated exactly against the piecewise
// linear interpolant of the samples (product trapezoid rule): second order,
// exact for constant and linear sources, and the kernel's kink at y = x
// falls on a node. Outside, the source equals `tails.left` / `tails.right`
// and those integrals are done in closed form.
//
// P' uses the signed kernel -sign(x-y) e^{-|x-y|/sigma} / (2 sigma^2) with
// the same rule, so P' = (R - L) / sigma where L and R are the left and
// right halves of the convolution. Both halves are built with one O(M)
// recursive sweep each.
//
// Throws InvalidArgument for sigma <= 0 or tails outside [0, 1].
PressureField green_convolve(std::span<const double> source, const Grid1D& grid, double sigma,
                             Tails tails);
PressureField green_convolve(const Profile& source, double sigma, Tails tails);

// Solves (I - sigma^2/dx^2 A) p = u where A is the second-difference matrix
// with Neumann rows (first and last diagonal entries -1). Thomas elimination
// without pivoting; the matrix is strictly diagonally dominant.
std::vector<double> discrete_solve(std::span<const double> u, double sigma, double dx);

// Face velocities v_{i+1/2} = -(p_{i+1} - p_i)/dx for the M+1 faces of an
// M-cell grid; the two boundary faces are zero (no flux).
std::vector<double> flux_velocity(std::span<const double> p, double dx);

}  // namespace kswave

#pragma once

#include <span>
#include <vector>

#include "kswave/grid.hpp"
#include "kswave/params.hpp"
#include "kswave/profile.hpp"

namespace kswave {

struct SchemeConfig {
    double cfl = 0.4;       // safety factor in (0, 1)
    double dt_max = 0.01;   // cap on the time step, in days
    bool reaction_on = true;

    void validate() const;
};

// Upwind flux (v)+ u_left - (v)- u_right.
constexpr double upwind_flux(double v_face, double u_left, double u_right) noexcept {
    return v_face >= 0.0 ? v_face * u_left : v_face * u_right;
}

// Largest explicit step (normalized time) for the current state:
//   dt <= cfl / (2 chi max|v| / dx + 1 + chi / sigma^2).
// The advective, compressive and reaction parts together keep every cell in
// [0, 1] when the data start there, and the scheme positive otherwise.
double stable_dt(std::span<const double> u, const Grid1D& grid, const NormalizedParams& params,
                 const SchemeConfig& cfg);

// One explicit upwind step of the normalized system over dt (normalized time):
// pressure from the Neumann solve, face velocities, conservative update with
// zero boundary fluxes, then dt u (1 - u) when the reaction is on.
// Throws InvalidArgument if dt exceeds stable_dt, and InvariantViolation if
// any cell ends below -1e-14 (values in (-1e-14, 0) are set to 0).
SimState step(const SimState& state, const NormalizedParams& params, const SchemeConfig& cfg,
              double dt);

// Advances the normalized system from u0 to t_end and returns the states at
// `snapshot_times` (sorted, within [0, t_end]; empty means {t_end}). Steps
// are shortened so every snapshot lands on an exact step time. Here
// cfg.dt_max is read in normalized time.
std::vector<SimState> simulate(std::span<const double> u0, const Grid1D& grid,
                               const NormalizedParams& params, const SchemeConfig& cfg,
                               double t_end, std::span<const double> snapshot_times);

// Same as simulate but in raw units: densities are scaled by 1/capacity,
// times (t_end, snapshots, cfg.dt_max, all in days) by growth, and the
// returned states are mapped back to days and density units.
std::vector<SimState> simulate_model(std::span<const double> u0, const Grid1D& grid,
                                     const ModelParams& params, const SchemeConfig& cfg,
                                     double t_end_days, std::span<const double> snapshot_days);

}  // namespace kswave

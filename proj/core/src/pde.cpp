#include "kswave/pde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kswave/elliptic.hpp"
#include "kswave/error.hpp"

namespace kswave {

namespace {

constexpr double kNegativeSlack = 1e-14;

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Writing the upwind update as
//   u_i + (chi dt/dx)[v+_{i-1/2}(u_{i-1} - u_i) + v-_{i+1/2}(u_{i+1} - u_i)]
//       + (chi dt/sigma^2) u_i (p_i - u_i) + dt u_i (1 - u_i)
// shows the new value is a convex combination plus terms bounded by
// (1 - u_i) dt (1 + chi/sigma^2) when 0 <= u, p <= 1. The new value then stays
// in [0, 1] if (chi dt/dx) 2 max|v| + dt (1 + chi/sigma^2) <= 1.
double stable_dt_from_velocity(std::span<const double> v, double dx, double chi, double sigma,
                               double cfl) {
    const double rate = 2.0 * chi * max_abs(v) / dx + 1.0 + chi / (sigma * sigma);
    return cfl / rate;
}

}  // namespace

void SchemeConfig::validate() const {
    if (!(cfl > 0.0 && cfl < 1.0)) {
        throw InvalidArgument("cfl must lie in (0, 1)");
    }
    if (!(dt_max > 0.0)) {
        throw InvalidArgument("dt_max must be positive");
    }
}

double stable_dt(std::span<const double> u, const Grid1D& grid, const NormalizedParams& params,
                 const SchemeConfig& cfg) {
    const auto p = discrete_solve(u, params.sigma, grid.dx());
    const auto v = flux_velocity(p, grid.dx());
    return stable_dt_from_velocity(v, grid.dx(), params.chi, params.sigma, cfg.cfl);
}

SimState step(const SimState& state, const NormalizedParams& params, const SchemeConfig& cfg,
              double dt) {
    cfg.validate();
    const Grid1D& grid = state.grid;
    const double dx = grid.dx();
    const std::size_t m = grid.size();
    const auto& u = state.u;

    const auto p = discrete_solve(u, params.sigma, dx);
    const auto v = flux_velocity(p, dx);
    const double bound = stable_dt_from_velocity(v, dx, params.chi, params.sigma, cfg.cfl);
    if (!(dt > 0.0) || dt > bound * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "time step " << dt << " violates the stability bound " << bound;
        throw InvalidArgument(msg.str());
    }

    // flux[k] lives on face k, between cells k-1 and k; faces 0 and m are walls.
    std::vector<double> flux(m + 1, 0.0);
    for (std::size_t k = 1; k < m; ++k) {
        flux[k] = upwind_flux(v[k], u[k - 1], u[k]);
    }

    const double ratio = params.chi * dt / dx;
    std::vector<double> next(m);
    for (std::size_t i = 0; i < m; ++i) {
        double value = u[i] - ratio * (flux[i + 1] - flux[i]);
        if (cfg.reaction_on) {
            value += dt * u[i] * (1.0 - u[i]);
        }
        if (value < 0.0) {
            if (value < -kNegativeSlack) {
                std::ostringstream msg;
                msg << "negative density " << value << " at x=" << grid[i] << " after step";
                throw InvariantViolation(msg.str());
            }
            value = 0.0;
        }
        next[i] = value;
    }
    return SimState(state.t + dt, grid, std::move(next));
}

std::vector<SimState> simulate(std::span<const double> u0, const Grid1D& grid,
                               const NormalizedParams& params, const SchemeConfig& cfg,
                               double t_end, std::span<const double> snapshot_times) {
    cfg.validate();
    if (!(t_end >= 0.0)) {
        throw InvalidArgument("t_end must be nonnegative");
    }
    std::vector<double> targets(snapshot_times.begin(), snapshot_times.end());
    if (targets.empty()) targets.push_back(t_end);
    for (std::size_t k = 0; k < targets.size(); ++k) {
        if (targets[k] < 0.0 || targets[k] > t_end * (1.0 + 1e-12) ||
            (k > 0 && targets[k] <= targets[k - 1])) {
            throw InvalidArgument("snapshot times must be increasing and lie in [0, t_end]");
        }
    }

    SimState state(0.0, grid, std::vector<double>(u0.begin(), u0.end()));
    std::vector<SimState> out;
    out.reserve(targets.size());
    std::size_t next = 0;
    while (next < targets.size() && targets[next] <= 0.0) {
        out.push_back(state);
        ++next;
    }
    while (next < targets.size()) {
        const double target = targets[next];
        double dt = std::min(cfg.dt_max, stable_dt(state.u, grid, params, cfg));
        const double remaining = target - state.t;
        const bool lands = remaining <= dt;
        if (lands) {
            dt = remaining;
        } else if (remaining < 2.0 * dt) {
            dt = 0.5 * remaining;  // two even steps instead of a full one and a sliver
        }
        state = step(state, params, cfg, dt);
        if (lands) {
            state.t = target;
            out.push_back(state);
            ++next;
        }
    }
    return out;
}

std::vector<SimState> simulate_model(std::span<const double> u0, const Grid1D& grid,
                                     const ModelParams& params, const SchemeConfig& cfg,
                                     double t_end_days, std::span<const double> snapshot_days) {
    const NormalizedParams norm = normalize(params);
    std::vector<double> u(u0.begin(), u0.end());
    for (double& x : u) x /= norm.density_scale;
    std::vector<double> times(snapshot_days.begin(), snapshot_days.end());
    for (double& t : times) t *= norm.time_scale;
    SchemeConfig scaled = cfg;
    scaled.dt_max = cfg.dt_max * norm.time_scale;

    auto states = simulate(u, grid, norm, scaled, t_end_days * norm.time_scale, times);
    for (std::size_t k = 0; k < states.size(); ++k) {
        // Report the requested day values verbatim rather than t * (1/growth).
        states[k].t = snapshot_days.empty() ? t_end_days : snapshot_days[k];
        for (double& x : states[k].u) x *= norm.density_scale;
    }
    return states;
}

}  // namespace kswave

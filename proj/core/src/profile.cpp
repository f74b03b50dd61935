#include "kswave/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kswave/error.hpp"

namespace kswave {

namespace {

void require_size(const Grid1D& grid, std::size_t n, const char* what) {
    if (n != grid.size()) {
        std::ostringstream msg;
        msg << what << " has " << n << " samples but the grid has " << grid.size() << " cells";
        throw InvalidArgument(msg.str());
    }
}

[[noreturn]] void violation(const char* what, std::size_t i, double x, double value) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "inadmissible profile: " << what << " at index " << i << " (x=" << x
        << ", value=" << value << ")";
    throw InvariantViolation(msg.str());
}

// Brings `value` into [lo, hi]. Beyond the tolerance it is always an error;
// inside it, strict mode still refuses to touch the sample.
double enforce_range(double value, double lo, double hi, AdmissibilityMode mode, const char* what,
                     std::size_t i, double x) {
    if (!std::isfinite(value)) {
        violation(what, i, x, value);
    }
    if (value >= lo && value <= hi) {
        return value;
    }
    const double excess = value < lo ? lo - value : value - hi;
    if (excess > kAdmissibleTolerance || mode == AdmissibilityMode::strict) {
        violation(what, i, x, value);
    }
    return std::clamp(value, lo, hi);
}

}  // namespace

Profile::Profile(Grid1D grid, std::vector<double> u, std::vector<double> du, Orientation orientation)
    : grid_(std::move(grid)), u_(std::move(u)), du_(std::move(du)), orientation_(orientation) {
    require_size(grid_, u_.size(), "profile values");
    require_size(grid_, du_.size(), "profile derivative");
}

Profile Profile::admissible(Grid1D grid, std::vector<double> u, std::vector<double> du,
                            double slope_bound, AdmissibilityMode mode) {
    require_size(grid, u.size(), "profile values");
    require_size(grid, du.size(), "profile derivative");
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = enforce_range(u[i], 0.0, 1.0, mode, "value outside [0,1]", i, grid[i]);
        du[i] = enforce_range(du[i], 0.0, slope_bound, mode, "derivative outside [0,c/(2chi)]", i,
                              grid[i]);
        if (i > 0 && u[i] < u[i - 1]) {
            if (u[i - 1] - u[i] > kAdmissibleTolerance || mode == AdmissibilityMode::strict) {
                violation("value decreases", i, grid[i], u[i] - u[i - 1]);
            }
            u[i] = u[i - 1];
        }
    }
    return Profile(std::move(grid), std::move(u), std::move(du), Orientation::increasing);
}

bool is_admissible(const Profile& p, double slope_bound, double tolerance) {
    if (p.orientation() != Orientation::increasing) {
        return false;
    }
    const auto u = p.u();
    const auto du = p.du();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!(u[i] >= -tolerance && u[i] <= 1.0 + tolerance)) return false;
        if (!(du[i] >= -tolerance && du[i] <= slope_bound + tolerance)) return false;
        if (i > 0 && u[i] < u[i - 1] - tolerance) return false;
    }
    return true;
}

double weighted_norm(const Profile& p, double eta) {
    if (!(eta > 0.0)) {
        throw InvalidArgument("weighted norm requires eta > 0");
    }
    const auto x = p.grid().centers();
    const auto u = p.u();
    const auto du = p.du();
    double sup_u = 0.0;
    double sup_du = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double w = std::exp(-eta * std::abs(x[i]));
        sup_u = std::max(sup_u, w * std::abs(u[i]));
        sup_du = std::max(sup_du, w * std::abs(du[i]));
    }
    return sup_u + sup_du;
}

double weighted_distance(const Profile& a, const Profile& b, double eta) {
    require_same_grid(a.grid(), b.grid(), "weighted_distance");
    std::vector<double> du(a.size());
    std::vector<double> ddu(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        du[i] = a.u()[i] - b.u()[i];
        ddu[i] = a.du()[i] - b.du()[i];
    }
    return weighted_norm(Profile(a.grid(), std::move(du), std::move(ddu)), eta);
}

SimState::SimState(double time, Grid1D g, std::vector<double> values)
    : t(time), grid(std::move(g)), u(std::move(values)) {
    require_size(grid, u.size(), "density");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!(u[i] >= 0.0) || !std::isfinite(u[i])) {
            std::ostringstream msg;
            msg << "density must be finite and nonnegative; u[" << i << "]=" << u[i];
            throw InvalidArgument(msg.str());
        }
    }
}

}  // namespace kswave

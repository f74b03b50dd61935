#pragma once

#include <span>
#include <vector>

#include "kswave/grid.hpp"

namespace kswave {

enum class Orientation { increasing, decreasing };

// How an admissibility check treats samples that sit outside the bounds by
// no more than `kAdmissibleTolerance`: reject them, or clamp them back.
enum class AdmissibilityMode { strict, lenient };

inline constexpr double kAdmissibleTolerance = 1e-12;

// A sampled wave profile U together with its derivative U'.
//
// The plain constructor only checks sizes; `Profile::admissible` additionally
// enforces 0 <= U <= 1, 0 <= U' <= slope_bound and U nondecreasing.
class Profile {
public:
    Profile(Grid1D grid, std::vector<double> u, std::vector<double> du,
            Orientation orientation = Orientation::increasing);

    // Samples that violate a bound by more than kAdmissibleTolerance always
    // throw InvariantViolation. Within the tolerance, strict mode throws and
    // lenient mode clamps. Only the increasing orientation is admissible.
    static Profile admissible(Grid1D grid, std::vector<double> u, std::vector<double> du,
                              double slope_bound,
                              AdmissibilityMode mode = AdmissibilityMode::strict);

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const double> u() const noexcept { return u_; }
    std::span<const double> du() const noexcept { return du_; }
    Orientation orientation() const noexcept { return orientation_; }
    std::size_t size() const noexcept { return u_.size(); }

private:
    Grid1D grid_;
    std::vector<double> u_;
    std::vector<double> du_;
    Orientation orientation_;
};

// Returns true when p lies in the admissible set to within `tolerance`.
bool is_admissible(const Profile& p, double slope_bound, double tolerance = kAdmissibleTolerance);

// sup_i e^{-eta|x_i|}|u_i| + sup_i e^{-eta|x_i|}|du_i|.
double weighted_norm(const Profile& p, double eta);

// weighted_norm of the pointwise difference; grids must match.
double weighted_distance(const Profile& a, const Profile& b, double eta);

// Cell averages of the density at time t (days, or normalized time when the
// state belongs to a normalized run).
struct SimState {
    double t = 0.0;
    Grid1D grid;
    std::vector<double> u;

    SimState(double time, Grid1D g, std::vector<double> values);
};

}  // namespace kswave

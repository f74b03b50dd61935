#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace kswave {

// Uniform cell-centered mesh on [x_min, x_max] with m cells.
//
// Centers are laid out symmetrically about the domain midpoint, so a
// symmetric domain with an odd cell count has a center exactly at 0.
class Grid1D {
public:
    Grid1D(double x_min, double x_max, std::size_t m);

    // Cells of width dx whose count is the nearest integer to the domain
    // length over dx. Throws if the length is not a multiple of dx (to 1e-9).
    static Grid1D with_spacing(double x_min, double x_max, double dx);

    // Grid whose centers are exactly -half_width, ..., 0, ..., half_width.
    // Used for wave solves, which anchor the profile at x = 0.
    static Grid1D symmetric_nodes(double half_width, double dx);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    std::size_t size() const noexcept { return centers_.size(); }
    double dx() const noexcept { return dx_; }
    double length() const noexcept { return x_max_ - x_min_; }
    std::span<const double> centers() const noexcept { return centers_; }
    double operator[](std::size_t i) const noexcept { return centers_[i]; }

    // Index of the center lying exactly at x = 0 (to 1e-9 dx), if any.
    std::optional<std::size_t> zero_index() const noexcept;

    friend bool operator==(const Grid1D& a, const Grid1D& b) noexcept {
        return a.x_min_ == b.x_min_ && a.x_max_ == b.x_max_ && a.size() == b.size();
    }

private:
    double x_min_;
    double x_max_;
    double dx_;
    std::vector<double> centers_;
};

// Throws GridMismatch with `what` in the message when a != b.
void require_same_grid(const Grid1D& a, const Grid1D& b, const char* what);

}  // namespace kswave

#include "kswave/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "kswave/error.hpp"

namespace kswave {

Grid1D::Grid1D(double x_min, double x_max, std::size_t m) : x_min_(x_min), x_max_(x_max) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
        throw InvalidArgument("grid requires finite x_min < x_max");
    }
    if (m < 2) {
        throw InvalidArgument("grid requires at least 2 cells");
    }
    dx_ = (x_max - x_min) / static_cast<double>(m);
    const double mid = 0.5 * (x_min + x_max);
    const double offset = 0.5 * static_cast<double>(m - 1);
    centers_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        centers_[i] = mid + (static_cast<double>(i) - offset) * dx_;
    }
}

Grid1D Grid1D::with_spacing(double x_min, double x_max, double dx) {
    if (!(dx > 0.0)) {
        throw InvalidArgument("grid spacing must be positive");
    }
    const double cells = (x_max - x_min) / dx;
    const double rounded = std::round(cells);
    if (std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
        std::ostringstream msg;
        msg << "domain length " << (x_max - x_min) << " is not a multiple of dx=" << dx;
        throw InvalidArgument(msg.str());
    }
    return Grid1D(x_min, x_max, static_cast<std::size_t>(rounded));
}

Grid1D Grid1D::symmetric_nodes(double half_width, double dx) {
    if (!(half_width > 0.0) || !(dx > 0.0)) {
        throw InvalidArgument("symmetric grid needs positive half width and spacing");
    }
    const double steps = half_width / dx;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, steps)) {
        throw InvalidArgument("half width must be a multiple of dx for a node-centred wave grid");
    }
    const auto m = 2 * static_cast<std::size_t>(rounded) + 1;
    const double edge = half_width + 0.5 * dx;
    return Grid1D(-edge, edge, m);
}

std::optional<std::size_t> Grid1D::zero_index() const noexcept {
    const double pos = (0.0 - centers_.front()) / dx_;
    const double idx = std::round(pos);
    if (idx < 0.0 || idx >= static_cast<double>(centers_.size())) {
        return std::nullopt;
    }
    const auto i = static_cast<std::size_t>(idx);
    if (std::abs(centers_[i]) > 1e-9 * dx_) {
        return std::nullopt;
    }
    return i;
}

void require_same_grid(const Grid1D& a, const Grid1D& b, const char* what) {
    if (!(a == b)) {
        throw GridMismatch(std::string(what) + ": fields live on different grids");
    }
}

}  // namespace kswave

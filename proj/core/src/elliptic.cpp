#include "kswave/elliptic.hpp"

#include <cmath>

#include "kswave/error.hpp"

namespace kswave {

PressureField green_convolve(std::span<const double> source, const Grid1D& grid, double sigma,
                             Tails tails) {
    if (!(sigma > 0.0)) {
        throw InvalidArgument("green_convolve: sigma must be positive");
    }
    if (!(tails.left >= 0.0 && tails.left <= 1.0 && tails.right >= 0.0 && tails.right <= 1.0)) {
        throw InvalidArgument("green_convolve: tail constants must lie in [0, 1]");
    }
    const std::size_t m = grid.size();
    if (source.size() != m) {
        throw InvalidArgument("green_convolve: source size does not match grid");
    }

    const double h = grid.dx();
    const double decay = std::exp(-h / sigma);
    // Over one cell [a, a+h] with distance s from the near end,
    //   int_0^h e^{-s/sigma} ds = sigma (1 - decay)
    //   (1/h) int_0^h s e^{-s/sigma} ds = (sigma/h)(sigma (1 - decay) - h decay)
    // split into the weights of the near and far node of the linear interpolant.
    const double one_minus = -std::expm1(-h / sigma);
    const double mass = sigma * one_minus;
    const double first_moment = (sigma / h) * (sigma * one_minus - h * decay);
    const double w_far = first_moment / (2.0 * sigma);
    const double w_near = (mass - first_moment) / (2.0 * sigma);

    std::vector<double> left(m);
    std::vector<double> right(m);
    left[0] = 0.5 * tails.left;
    for (std::size_t i = 1; i < m; ++i) {
        left[i] = decay * left[i - 1] + w_far * source[i - 1] + w_near * source[i];
    }
    right[m - 1] = 0.5 * tails.right;
    for (std::size_t i = m - 1; i-- > 0;) {
        right[i] = decay * right[i + 1] + w_far * source[i + 1] + w_near * source[i];
    }

    PressureField out{grid, std::vector<double>(m), std::vector<double>(m)};
    for (std::size_t i = 0; i < m; ++i) {
        out.p[i] = left[i] + right[i];
        out.dp[i] = (right[i] - left[i]) / sigma;
    }
    return out;
}

PressureField green_convolve(const Profile& source, double sigma, Tails tails) {
    return green_convolve(source.u(), source.grid(), sigma, tails);
}

std::vector<double> discrete_solve(std::span<const double> u, double sigma, double dx) {
    const std::size_t m = u.size();
    if (m < 2) {
        throw InvalidArgument("discrete_solve: need at least 2 cells");
    }
    if (!(sigma > 0.0) || !(dx > 0.0)) {
        throw InvalidArgument("discrete_solve: sigma and dx must be positive");
    }
    // Row i: -a p_{i-1} + b_i p_i - a p_{i+1} = u_i with a = sigma^2/dx^2,
    // b_i = 1 + 2a inside and 1 + a on the Neumann rows. The recurrences are
    // kept in the form where every operation acts on nonnegative numbers, so
    // u >= 0 gives p >= 0 exactly.
    const double a = sigma * sigma / (dx * dx);
    std::vector<double> ratio(m);  // c'_i = a / (b_i - a c'_{i-1})
    std::vector<double> p(m);      // forward-eliminated right-hand side, then solution

    double pivot = 1.0 + a;
    ratio[0] = a / pivot;
    p[0] = u[0] / pivot;
    for (std::size_t i = 1; i < m; ++i) {
        const double diag = (i + 1 == m) ? 1.0 + a : 1.0 + 2.0 * a;
        pivot = diag - a * ratio[i - 1];
        ratio[i] = a / pivot;
        p[i] = (u[i] + a * p[i - 1]) / pivot;
    }
    for (std::size_t i = m - 1; i-- > 0;) {
        p[i] += ratio[i] * p[i + 1];
    }
    return p;
}

std::vector<double> flux_velocity(std::span<const double> p, double dx) {
    if (!(dx > 0.0)) {
        throw InvalidArgument("flux_velocity: dx must be positive");
    }
    const std::size_t m = p.size();
    std::vector<double> v(m + 1, 0.0);
    for (std::size_t i = 1; i < m; ++i) {
        v[i] = -(p[i] - p[i - 1]) / dx;
    }
    return v;
}

}  // namespace kswave

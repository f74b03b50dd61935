#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "kswave/elliptic.hpp"
#include "kswave/error.hpp"
#include "oracles.hpp"

using namespace kswave;
namespace kt = kswave::testing;

TEST(DiscreteSolve, MatchesDenseOracleOnRandomSystems) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t m = 2; m <= 50; ++m) {
        const double sigma = 0.2 + 2.0 * unit(rng);
        const double dx = 0.01 + 0.5 * unit(rng);
        std::vector<double> u(m);
        for (auto& x : u) x = unit(rng);
        const auto got = discrete_solve(u, sigma, dx);
        const auto want = kt::dense_solve(kt::neumann_matrix(m, sigma, dx), u);
        for (std::size_t i = 0; i < m; ++i) EXPECT_NEAR(got[i], want[i], 1e-12) << "m=" << m;
    }
}

TEST(DiscreteSolve, ConstantIsFixed) {
    const auto p = discrete_solve(std::vector<double>(37, 0.6), 1.3, 0.1);
    for (double v : p) EXPECT_NEAR(v, 0.6, 1e-14);
}

TEST(DiscreteSolve, MaximumPrincipleAndMassConservation) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> u(120);
        for (auto& x : u) x = unit(rng);
        const auto p = discrete_solve(u, 0.5 + unit(rng), 0.05);
        const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
        double mu = 0.0, mp = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            EXPECT_GE(p[i], *lo);
            EXPECT_LE(p[i], *hi);
            mu += u[i];
            mp += p[i];
        }
        EXPECT_NEAR(mu, mp, 1e-11);
    }
}

TEST(DiscreteSolve, Linearity) {
    std::vector<double> a(40), b(40), ab(40);
    for (std::size_t i = 0; i < 40; ++i) {
        a[i] = std::sin(0.3 * i);
        b[i] = std::cos(0.17 * i);
        ab[i] = 2.0 * a[i] - 3.0 * b[i];
    }
    const auto pa = discrete_solve(a, 1.0, 0.1), pb = discrete_solve(b, 1.0, 0.1);
    const auto pab = discrete_solve(ab, 1.0, 0.1);
    for (std::size_t i = 0; i < 40; ++i) EXPECT_NEAR(pab[i], 2 * pa[i] - 3 * pb[i], 1e-12);
}

TEST(DiscreteSolve, RejectsBadArguments) {
    EXPECT_THROW(discrete_solve(std::vector<double>(4, 0.0), 0.0, 0.1), InvalidArgument);
    EXPECT_THROW(discrete_solve(std::vector<double>(4, 0.0), 1.0, -0.1), InvalidArgument);
}

TEST(FluxVelocity, InteriorDifferencesAndWalls) {
    const std::vector<double> p{0.0, 1.0, 3.0};
    const auto v = flux_velocity(p, 0.5);
    ASSERT_EQ(v.size(), 4u);
    EXPECT_EQ(v[0], 0.0);
    EXPECT_DOUBLE_EQ(v[1], -2.0);
    EXPECT_DOUBLE_EQ(v[2], -4.0);
    EXPECT_EQ(v[3], 0.0);
}

TEST(GreenConvolve, GaussianClosedForm) {
    // Linear interpolation of e^{-x^2} is off by at most dx^2 max|u''| / 8 =
    // dx^2 / 4, which bounds the error of P; P' picks up another 1/sigma.
    for (double sigma : {0.5, 1.0, 2.0}) {
        std::vector<double> err;
        for (double dx : {0.02, 0.01}) {
            const auto g = Grid1D::symmetric_nodes(30.0, dx);
            std::vector<double> u(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) u[i] = std::exp(-g[i] * g[i]);
            const auto pf = green_convolve(u, g, sigma, Tails{0.0, 0.0});
            double e = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                const auto want = kt::gaussian_green(g[i], sigma);
                EXPECT_NEAR(pf.p[i], want.p, 0.25 * dx * dx);
                EXPECT_NEAR(pf.dp[i], want.dp, 0.25 * dx * dx / sigma);
                e = std::max(e, std::abs(pf.p[i] - want.p));
            }
            err.push_back(e);
        }
        EXPECT_NEAR(std::log2(err[0] / err[1]), 2.0, 0.1) << "sigma=" << sigma;
    }
}

TEST(GreenConvolve, StepSourceClosedForm) {
    // Source 0 for x < 0 and 1 for x >= 0 with matching tails; the node at
    // x = 0 carries the value 1, so the interpolant ramps over (-dx, 0).
    const double sigma = 1.0, dx = 1e-3;
    const auto g = Grid1D::symmetric_nodes(10.0, dx);
    std::vector<double> u(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) u[i] = g[i] >= 0.0 ? 1.0 : 0.0;
    const auto pf = green_convolve(u, g, sigma, Tails{});
    const auto ramp = [&](double y) { return y >= 0.0 ? 1.0 : (y > -dx ? 1.0 + y / dx : 0.0); };
    for (std::size_t i = 0; i < g.size(); i += 500) {
        const double x = g[i];
        const double exact = x >= 0.0 ? 1.0 - 0.5 * std::exp(-x / sigma) : 0.5 * std::exp(x / sigma);
        EXPECT_NEAR(pf.p[i], exact, 1e-3 * dx + 1e-3);
        const auto want = kt::brute_green(ramp, x, sigma, {-dx, 0.0});
        EXPECT_NEAR(pf.p[i], want.p, 1e-8) << "x=" << x;
        EXPECT_NEAR(pf.dp[i], want.dp, 1e-8) << "x=" << x;
    }
}

TEST(GreenConvolve, SmoothFrontAgainstBruteForce) {
    const double sigma = 0.8;
    const auto u_exact = [](double y) { return 0.5 * (1.0 + std::tanh(y)); };
    const auto g = Grid1D::symmetric_nodes(25.0, 0.02);
    std::vector<double> u(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) u[i] = u_exact(g[i]);
    const auto pf = green_convolve(u, g, sigma, Tails{});
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0, 4.0}) {
        const std::size_t i = static_cast<std::size_t>(std::lround((x + 25.0) / 0.02));
        const auto want = kt::brute_green(u_exact, g[i], sigma);
        EXPECT_NEAR(pf.p[i], want.p, 1e-4);
        EXPECT_NEAR(pf.dp[i], want.dp, 1e-4);
    }
}

TEST(GreenConvolve, ConstantSourceIsExact) {
    const auto g = Grid1D::symmetric_nodes(5.0, 0.1);
    const auto pf = green_convolve(std::vector<double>(g.size(), 1.0), g, 0.7, Tails{1.0, 1.0});
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_NEAR(pf.p[i], 1.0, 1e-14);
        EXPECT_NEAR(pf.dp[i], 0.0, 1e-14);
    }
}

TEST(GreenConvolve, BoundsForAdmissibleSource) {
    std::mt19937_64 rng(3);
    const auto g = Grid1D::symmetric_nodes(30.0, 0.1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto prof = kt::random_admissible(g, 1.0, rng);
        const auto pf = green_convolve(prof, 1.0, Tails{});
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_GE(pf.p[i], 0.0);
            EXPECT_LE(pf.p[i], 1.0);
            EXPECT_LE(std::abs(pf.dp[i]), 0.5 + 1e-14);  // |P'| <= 1/(2 sigma)
        }
    }
}

TEST(GreenConvolve, RejectsBadArguments) {
    const auto g = Grid1D::symmetric_nodes(1.0, 0.5);
    const std::vector<double> u(g.size(), 0.5);
    EXPECT_THROW(green_convolve(u, g, 0.0, Tails{}), InvalidArgument);
    EXPECT_THROW(green_convolve(u, g, 1.0, Tails{-0.1, 1.0}), InvalidArgument);
    EXPECT_THROW(green_convolve(std::vector<double>(3, 0.5), g, 1.0, Tails{}), InvalidArgument);
}

TEST(GreenConvolve, AgreesWithDiscreteSolveAtSecondOrder) {
    const double sigma = 1.0;
    std::vector<double> err;
    for (double dx : {0.1, 0.05, 0.025}) {
        const auto g = Grid1D::with_spacing(-20.0, 20.0, dx);
        std::vector<double> u(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) u[i] = std::exp(-g[i] * g[i]);
        const auto pd = discrete_solve(u, sigma, dx);
        const auto pg = green_convolve(u, g, sigma, Tails{0.0, 0.0});
        double e = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (std::abs(g[i]) <= 10.0) e = std::max(e, std::abs(pd[i] - pg.p[i]));
        }
        err.push_back(e);
    }
    for (std::size_t k = 1; k < err.size(); ++k) {
        EXPECT_NEAR(std::log2(err[k - 1] / err[k]), 2.0, 0.2);
    }
}

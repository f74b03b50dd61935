#include <gtest/gtest.h>

#include <cmath>

#include "kswave/analysis.hpp"
#include "kswave/error.hpp"
#include "kswave/speeds.hpp"

using namespace kswave;

namespace {

// Logistic front 1/(1 + e^{x - x0}) sampled on a grid.
SimState front_state(double t, double x0) {
    const Grid1D g(-20.0, 20.0, 400);
    std::vector<double> u(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) u[i] = 1.0 / (1.0 + std::exp(g[i] - x0));
    return SimState(t, g, u);
}

}  // namespace

TEST(FrontPosition, InterpolatesLinearly) {
    const Grid1D g(0.0, 4.0, 4);  // centers 0.5 .. 3.5
    const SimState s(0.0, g, {1.0, 0.8, 0.4, 0.0});
    EXPECT_DOUBLE_EQ(front_position(s, 0.5, FrontDirection::rightward), 2.25);
    const SimState mirrored(0.0, g, {0.0, 0.4, 0.8, 1.0});
    EXPECT_DOUBLE_EQ(front_position(mirrored, 0.5, FrontDirection::leftward), 1.75);
}

TEST(FrontPosition, RequiresExactlyOneCrossing) {
    const Grid1D g(0.0, 4.0, 4);
    EXPECT_THROW(front_position(SimState(0.0, g, {0.1, 0.1, 0.1, 0.1}), 0.5,
                                FrontDirection::rightward),
                 InvalidArgument);
    EXPECT_THROW(front_position(SimState(0.0, g, {1.0, 0.1, 1.0, 0.1}), 0.5,
                                FrontDirection::rightward),
                 InvalidArgument);
}

TEST(TrackFront, RecoversConstantSpeed) {
    std::vector<SimState> snaps;
    for (int k = 0; k <= 20; ++k) snaps.push_back(front_state(k, -10.0 + 0.7 * k));
    const auto track = track_front(snaps);
    ASSERT_EQ(track.times.size(), 21u);
    const auto fit = fit_speed(track, 0.0, 20.0);
    EXPECT_NEAR(fit.speed, 0.7, 1e-3);
    EXPECT_NEAR(fit.intercept, -10.0, 1e-2);
    EXPECT_GT(fit.r_squared, 0.9999);
    const auto tail = fit_speed(track);
    EXPECT_DOUBLE_EQ(tail.t_start, 5.0);
    EXPECT_DOUBLE_EQ(tail.t_end, 20.0);
}

TEST(TrackFront, RejectsUnorderedTimes) {
    std::vector<SimState> snaps{front_state(1.0, 0.0), front_state(0.5, 1.0)};
    EXPECT_THROW(track_front(snaps), InvalidArgument);
}

TEST(FitSpeed, NeedsThreeSamples) {
    FrontTrack t{{0.0, 1.0, 2.0}, {0.0, 1.0, 2.0}, 0.5};
    EXPECT_NO_THROW(fit_speed(t, 0.0, 2.0));
    EXPECT_THROW(fit_speed(t, 0.5, 2.0), InvalidArgument);
    FrontTrack flat{{0.0, 1.0, 2.0}, {3.0, 3.0, 3.0}, 0.5};
    const auto f = fit_speed(flat, 0.0, 2.0);
    EXPECT_EQ(f.speed, 0.0);
    EXPECT_EQ(f.r_squared, 1.0);
}

TEST(HealingTime, FirstSnapshotAboveThreshold) {
    const Grid1D g(0.0, 1.0, 3);
    std::vector<SimState> snaps{SimState(0.0, g, {1.0, 0.0, 1.0}), SimState(1.0, g, {1.0, 0.9, 1.0}),
                                SimState(2.0, g, {1.0, 0.96, 1.0}),
                                SimState(3.0, g, {1.0, 0.99, 1.0})};
    EXPECT_EQ(healing_time(snaps, 0.95), 2.0);
    EXPECT_FALSE(healing_time(snaps, 0.999).has_value());
}

TEST(Mass, SumTimesSpacing) {
    const Grid1D g(0.0, 2.0, 4);
    EXPECT_DOUBLE_EQ(mass(SimState(0.0, g, {1.0, 2.0, 3.0, 4.0})), 5.0);
}

TEST(SpeedReport, ClassifiesRegimes) {
    SpeedFit f;
    f.speed = 3.0;
    auto r = speed_report(f, 1.0, 1.0);
    EXPECT_TRUE(r.continuous_regime);
    EXPECT_FALSE(r.in_sharp_bracket);
    f.speed = 0.4;
    r = speed_report(f, 1.0, 1.0);
    EXPECT_TRUE(r.in_sharp_bracket);
    EXPECT_FALSE(r.anomalous);
    f.speed = 0.1;
    r = speed_report(f, 1.0, 1.0);
    EXPECT_TRUE(r.anomalous);
    EXPECT_DOUBLE_EQ(r.c_star, c_star(1.0, 1.0));
}

TEST(SharpSlower, ComparesSpeeds) {
    SpeedFit slow, fast;
    slow.speed = 0.5;
    fast.speed = 1.0;
    EXPECT_TRUE(sharp_slower_than_continuous(slow, fast));
    EXPECT_FALSE(sharp_slower_than_continuous(fast, slow));
}

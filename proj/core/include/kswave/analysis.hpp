#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kswave/profile.hpp"
#include "kswave/speeds.hpp"

namespace kswave {

enum class FrontDirection { rightward, leftward };

// Positions where each snapshot crosses `level`.
struct FrontTrack {
    std::vector<double> times;
    std::vector<double> positions;
    double level = 0.5;
};

// Crossing of `level` in one density vector, linearly interpolated between
// the bracketing cells. A rightward front has the occupied side on the left
// (u >= level then u < level going right); a leftward front is the mirror.
// Throws InvalidArgument when there is no such crossing or more than one.
double front_position(const SimState& state, double level, FrontDirection direction);

FrontTrack track_front(std::span<const SimState> snapshots, double level = 0.5,
                       FrontDirection direction = FrontDirection::rightward);

struct SpeedFit {
    double speed = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double t_start = 0.0;
    double t_end = 0.0;
};

// Least-squares line through the (t, position) samples with t in
// [t_start, t_end]. Needs at least 3 samples there.
SpeedFit fit_speed(const FrontTrack& track, double t_start, double t_end);

// Fit over the last 75% of the tracked time span.
SpeedFit fit_speed(const FrontTrack& track);

// First snapshot time at which min_x u >= threshold, or nullopt if the
// run never gets there.
std::optional<double> healing_time(std::span<const SimState> snapshots, double threshold = 0.95);

// sum_i u_i dx
double mass(const SimState& state);

struct SpeedReport {
    double measured = 0.0;
    double c_star = 0.0;
    SpeedBracket sharp{};
    bool continuous_regime = false;  // measured >= c_star
    bool in_sharp_bracket = false;   // lower < measured < upper
    bool anomalous = false;          // measured below the sharp lower bound
};

SpeedReport speed_report(const SpeedFit& measured, double chi, double sigma);

// True when the sharp-like run (compactly supported start) is slower than
// the continuous-like run (exponential tail start).
bool sharp_slower_than_continuous(const SpeedFit& sharp_like, const SpeedFit& continuous_like);

}  // namespace kswave

#include "kswave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kswave/error.hpp"

namespace kswave {

double front_position(const SimState& state, double level, FrontDirection direction) {
    const auto& u = state.u;
    const auto x = state.grid.centers();
    std::size_t found = 0;
    double position = 0.0;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        const double a = u[i];
        const double b = u[i + 1];
        const bool crosses = direction == FrontDirection::rightward ? (a >= level && b < level)
                                                                    : (a < level && b >= level);
        if (!crosses) continue;
        ++found;
        position = x[i] + (a - level) / (a - b) * (x[i + 1] - x[i]);
    }
    if (found != 1) {
        std::ostringstream msg;
        msg << (found == 0 ? "no" : "ambiguous") << " front crossing of level " << level
            << " at t=" << state.t << " (" << found << " crossings)";
        throw InvalidArgument(msg.str());
    }
    return position;
}

FrontTrack track_front(std::span<const SimState> snapshots, double level,
                       FrontDirection direction) {
    FrontTrack track;
    track.level = level;
    for (const auto& s : snapshots) {
        if (!track.times.empty() && !(s.t > track.times.back())) {
            throw InvalidArgument("track_front: snapshot times must be strictly increasing");
        }
        track.times.push_back(s.t);
        track.positions.push_back(front_position(s, level, direction));
    }
    return track;
}

SpeedFit fit_speed(const FrontTrack& track, double t_start, double t_end) {
    std::vector<double> ts;
    std::vector<double> xs;
    for (std::size_t k = 0; k < track.times.size(); ++k) {
        if (track.times[k] >= t_start && track.times[k] <= t_end) {
            ts.push_back(track.times[k]);
            xs.push_back(track.positions[k]);
        }
    }
    if (ts.size() < 3) {
        throw InvalidArgument("fit_speed: need at least 3 samples in the window");
    }
    const double n = static_cast<double>(ts.size());
    double t_mean = 0.0;
    double x_mean = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        t_mean += ts[k];
        x_mean += xs[k];
    }
    t_mean /= n;
    x_mean /= n;
    double stt = 0.0;
    double stx = 0.0;
    double sxx = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const double dt = ts[k] - t_mean;
        const double dx = xs[k] - x_mean;
        stt += dt * dt;
        stx += dt * dx;
        sxx += dx * dx;
    }
    SpeedFit fit;
    fit.speed = stx / stt;
    fit.intercept = x_mean - fit.speed * t_mean;
    // A perfectly stationary front is a perfect fit.
    fit.r_squared = sxx > 0.0 ? std::clamp(stx * stx / (stt * sxx), 0.0, 1.0) : 1.0;
    fit.t_start = t_start;
    fit.t_end = t_end;
    return fit;
}

SpeedFit fit_speed(const FrontTrack& track) {
    if (track.times.empty()) {
        throw InvalidArgument("fit_speed: empty track");
    }
    const double t0 = track.times.front();
    const double t1 = track.times.back();
    return fit_speed(track, t0 + 0.25 * (t1 - t0), t1);
}

std::optional<double> healing_time(std::span<const SimState> snapshots, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw InvalidArgument("healing_time: threshold must lie in (0, 1)");
    }
    for (const auto& s : snapshots) {
        if (*std::min_element(s.u.begin(), s.u.end()) >= threshold) {
            return s.t;
        }
    }
    return std::nullopt;
}

double mass(const SimState& state) {
    double total = 0.0;
    for (double x : state.u) total += x;
    return total * state.grid.dx();
}

SpeedReport speed_report(const SpeedFit& measured, double chi, double sigma) {
    SpeedReport r;
    r.measured = measured.speed;
    r.c_star = c_star(chi, sigma);
    r.sharp = sharp_speed_bracket(chi, sigma);
    r.continuous_regime = r.measured >= r.c_star;
    r.in_sharp_bracket = r.measured > r.sharp.lower && r.measured < r.sharp.upper;
    r.anomalous = r.measured < r.sharp.lower;
    return r;
}

bool sharp_slower_than_continuous(const SpeedFit& sharp_like, const SpeedFit& continuous_like) {
    return sharp_like.speed < continuous_like.speed;
}

}  // namespace kswave

#include "kswave/params.hpp"

#include <cmath>
#include <sstream>

#include "kswave/error.hpp"
#include "kswave/speeds.hpp"

namespace kswave {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << name << " must be a positive finite number, got " << value;
        throw InvalidArgument(msg.str());
    }
}

}  // namespace

void ModelParams::validate() const {
    require_positive(chi, "chi");
    require_positive(sigma, "sigma");
    require_positive(growth, "growth");
    require_positive(capacity, "capacity");
}

NormalizedParams NormalizedParams::from_dimensionless(double chi, double sigma) {
    require_positive(chi, "chi");
    require_positive(sigma, "sigma");
    return NormalizedParams{chi, sigma, chi / (sigma * sigma), 1.0, 1.0};
}

NormalizedParams normalize(const ModelParams& params) {
    params.validate();
    const double chi = params.chi * params.capacity / params.growth;
    return NormalizedParams{chi, params.sigma, chi / (params.sigma * params.sigma),
                            params.growth, params.capacity};
}

double anchor_bound(double chi, double sigma) {
    const double s2 = sigma * sigma;
    return s2 / (2.0 * (s2 + chi));
}

WaveParams WaveParams::with_default_eta(double c, double u0, double sigma) {
    require_positive(sigma, "sigma");
    return WaveParams{c, u0, 0.5 / sigma};
}

void WaveParams::validate(double chi, double sigma) const {
    require_positive(chi, "chi");
    require_positive(sigma, "sigma");
    const double threshold = c_star(chi, sigma);
    // Relative slack so that c = c_star(...) computed elsewhere is accepted.
    if (!(c >= threshold * (1.0 - 1e-14))) {
        std::ostringstream msg;
        msg << "wave speed c=" << c << " is below the continuous-wave threshold "
            << threshold << " (need c >= 2 sqrt(chi (1 + chi/sigma^2)))";
        throw InvalidArgument(msg.str());
    }
    const double ub = anchor_bound(chi, sigma);
    if (!(u0 > 0.0 && u0 < ub)) {
        std::ostringstream msg;
        msg << "anchor u0=" << u0 << " outside (0, " << ub
            << "); need 0 < u0 < sigma^2/(2(sigma^2+chi))";
        throw InvalidArgument(msg.str());
    }
    if (!(eta > 0.0 && eta < 1.0 / sigma)) {
        std::ostringstream msg;
        msg << "weighted-norm rate eta=" << eta << " outside (0, 1/sigma=" << 1.0 / sigma << ")";
        throw InvalidArgument(msg.str());
    }
}

}  // namespace kswave

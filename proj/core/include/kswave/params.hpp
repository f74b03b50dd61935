#pragma once

namespace kswave {

/// Raw physical constants of the repulsion-growth model
///   u_t = chi (u p_x)_x + growth * u (1 - u / capacity),   p - sigma^2 p_xx = u.
struct ModelParams {
    double chi = 1.0;       ///< repulsion coefficient
    double sigma = 1.0;     ///< sensing length
    double growth = 1.0;    ///< logistic growth rate (per day)
    double capacity = 1.0;  ///< carrying capacity (density units)

    /// Throws InvalidArgument unless all four fields are strictly positive.
    void validate() const;
};

/// Parameters of the dimensionless system (growth = capacity = 1).
///
/// Rescaling u -> u / capacity and t -> growth * t maps the raw model onto
///   u_t = chi' (u p_x)_x + u (1 - u),   chi' = chi * capacity / growth,
/// so `chi` here is chi'. `time_scale` and `density_scale` keep what is
/// needed to map normalized results back to days and density units.
struct NormalizedParams {
    double chi = 1.0;
    double sigma = 1.0;
    double chi_hat = 1.0;        ///< chi / sigma^2
    double time_scale = 1.0;     ///< raw growth rate; t_days = t_normalized / time_scale
    double density_scale = 1.0;  ///< raw capacity; u_raw = density_scale * u

    /// Builds a normalized set directly (growth = capacity = 1).
    static NormalizedParams from_dimensionless(double chi, double sigma);
};

NormalizedParams normalize(const ModelParams& params);

/// Parameters of the traveling-wave fixed-point problem.
struct WaveParams {
    double c = 0.0;    ///< wave speed
    double u0 = 0.0;   ///< anchor value U(0)
    double eta = 0.0;  ///< decay rate of the weighted norm

    /// Builds WaveParams with eta defaulting to 1/(2 sigma).
    static WaveParams with_default_eta(double c, double u0, double sigma);

    /// Checks c >= 2 sqrt(chi (1 + chi/sigma^2)), 0 < u0 < sigma^2/(2(sigma^2+chi))
    /// and 0 < eta < 1/sigma. Throws InvalidArgument naming the failed bound.
    void validate(double chi, double sigma) const;
};

/// Upper bound on the anchor value: sigma^2 / (2 (sigma^2 + chi)).
double anchor_bound(double chi, double sigma);

}  // namespace kswave

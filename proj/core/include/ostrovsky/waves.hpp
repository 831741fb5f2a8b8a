#pragma once

#include <span>

#include "ostrovsky/types.hpp"

namespace ostrovsky::waves {

/// Closed-form peaked profile value at z (reduced to [-pi, pi]).
double peaked_value(int p, double z);
/// Closed-form peaked derivative at z (away from the peak points).
double peaked_derivative_value(int p, double z);

/// Peaked profile U* sampled on the standard grid z_j = -pi + 2 pi j / n.
/// n_samples must be a multiple of 4 so the quadrature mean vanishes.
WaveProfile peaked_profile(int p, int n_samples);

/// U*' sampled on the half-cell offset grid z_j = -pi + (j + 1/2) 2 pi / n,
/// which avoids the peak points.
SampledField peaked_derivative(int p, int n_samples);

/// Analytic Fourier coefficients of c* - U*(z)^p, |n| <= N.
FourierCoeffs peaked_coefficients(int p, int N);

struct SmoothWaveResult {
    WaveProfile profile;
    double residual;       // max-norm residual of the differential form
    double trough;         // u(0), the shooting parameter at convergence
    double sensitivity;    // d(shooting mismatch)/d(trough), conditioning report
};

/// Smooth periodic wave for 1 < c < c*(p) by shooting on the trough value.
/// Throws on out-of-range speed or shooting failure.
SmoothWaveResult smooth_wave_solve(double c, int p, double tol, int n_samples = 1024);

/// Fourier coefficients of c - U(z)^p for a wave profile. Peaked profiles use
/// the analytic series; smooth profiles a dealiased transform of oversampled
/// values.
FourierCoeffs profile_fourier(const WaveProfile& profile, int N);

/// Breaking indicator m0 = 1 - 3 u'' (p=1) or 1 - sqrt(2)|u'| (p=2) by
/// spectral differentiation.
BreakingField breaking_indicator(std::span<const double> u, int p);

}  // namespace ostrovsky::waves

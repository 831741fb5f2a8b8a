#pragma once

#include <span>
#include <vector>

#include "ostrovsky/types.hpp"

namespace ostrovsky::fourier {

/// Unnormalized DFT: X_k = sum_j x_j e^{-2 pi i jk/n}. Any n >= 1.
std::vector<complexd> dft(std::span<const complexd> x);
/// Inverse of dft (includes the 1/n factor).
std::vector<complexd> idft(std::span<const complexd> X);

/// Fourier coefficients c_n, |n| <= N, of a function sampled at
/// z_j = -pi + 2 pi j / n_samples. Requires 2N < n_samples.
FourierCoeffs coeffs_from_samples(std::span<const double> u, int N);
FourierCoeffs coeffs_from_samples(std::span<const complexd> u, int N);

/// Evaluate sum_n c_n e^{inz} at an arbitrary point.
complexd evaluate(const FourierCoeffs& c, double z);

/// Samples of the trigonometric interpolant on the standard grid of size n.
std::vector<double> synthesize_real(const FourierCoeffs& c, int n);

/// Spectral derivative of given order for real periodic samples on the
/// standard grid (Nyquist mode dropped).
std::vector<double> derivative(std::span<const double> u, int order = 1);

/// Zero-mean antiderivative of zero-mean real periodic samples.
std::vector<double> antiderivative(std::span<const double> u);

}  // namespace ostrovsky::fourier

#pragma once

#include <span>

#include "ostrovsky/types.hpp"

namespace ostrovsky::spectral_ops {

/// Diagonal anti-derivative symbol: entry(n,n) = 1/(i(n+kappa)).
/// Mode 0 is excluded at kappa = 0 and included otherwise.
OperatorMatrix assemble_K(int N, double kappa);

/// Toeplitz multiplication block entry(m,n) = d_{m-n} on the retained mode
/// set. Requires d for |n| <= 2N so the block has no convolution truncation.
OperatorMatrix assemble_multiplier(const FourierCoeffs& d, int N, double kappa = 0.0);

/// Galerkin matrix of A0 = d/dz (c - U^p) or A = A0 + K on the zero-mean
/// space (kappa = 0) or the Floquet space (kappa != 0):
///   entry(m,n) = i(m+kappa) d_{m-n} [+ delta_{mn}/(i(m+kappa))].
OperatorMatrix assemble_operator(const WaveProfile& profile, int N, double kappa,
                                 bool include_K);

/// Same assembly from precomputed coefficients of c - U^p (needs |n| <= 2N).
OperatorMatrix assemble_operator(const FourierCoeffs& d, int N, double kappa,
                                 bool include_K);

/// Fourier truncation of a sampled zero-mean field onto the mode set of
/// (N, kappa), for use as operator input.
FourierVector truncate_field(std::span<const double> samples, int N, double kappa = 0.0);

/// Apply an OperatorMatrix to a FourierVector (dimension-checked).
FourierVector apply(const OperatorMatrix& M, const FourierVector& v);

}  // namespace ostrovsky::spectral_ops

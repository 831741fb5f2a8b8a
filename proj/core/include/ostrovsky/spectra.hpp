#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ostrovsky/types.hpp"

namespace ostrovsky::spectra {

struct SpectrumResult {
    std::vector<complexd> eigenvalues;   // sorted by (Re, Im)
    std::vector<double> residuals;       // ||Av - lambda v|| / ||v|| per eigenpair
    Eigen::MatrixXcd eigenvectors;       // columns, matching order
    int N = 0;
    double kappa = 0.0;
};

struct PseudospectrumField {
    std::vector<double> re_grid;
    std::vector<double> im_grid;
    Eigen::MatrixXd sigma_min;  // (im index, re index), row-major over im then re
    int N = 0;
};

/// All eigenvalues of a dense operator matrix with residual validation.
/// Throws on eigensolver non-convergence (with the LAPACK info code).
SpectrumResult eigenvalues(const OperatorMatrix& M);

/// Smallest singular value of M - lambda I (resolvent-norm probe:
/// 1/sigma_min = ||(M - lambda I)^{-1}||).
double smallest_singular(const OperatorMatrix& M, complexd lambda);

/// Grid of smallest_singular values over a rectangular lambda window.
/// threads > 1 splits grid points over worker threads; the stored field is
/// identical to the sequential evaluation regardless.
PseudospectrumField pseudospectrum_field(const OperatorMatrix& M,
                                         std::pair<double, double> re_range,
                                         std::pair<double, double> im_range,
                                         int res_re, int res_im, int threads = 1);

/// [min, max] of Re(lambda) over grid points with sigma_min < eps, or empty.
std::optional<std::pair<double, double>> strip_estimate(const PseudospectrumField& field,
                                                        double eps);

/// Maximum pointwise |sigma_min(A - lambda) - sigma_min(A0 - lambda)| over the
/// common grid of two fields computed on identical windows.
double compare_pseudospectra(const PseudospectrumField& a, const PseudospectrumField& b);

}  // namespace ostrovsky::spectra

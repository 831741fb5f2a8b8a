#include "ostrovsky/spectral_ops.hpp"

#include <cmath>

#include "ostrovsky/fourier.hpp"
#include "ostrovsky/waves.hpp"

namespace ostrovsky::spectral_ops {

namespace {

void check_params(int N, double kappa) {
    if (N < 1) throw std::invalid_argument("mode cutoff must be >= 1");
    if (std::abs(kappa) > 0.5) throw std::invalid_argument("Floquet exponent must lie in [-1/2, 1/2]");
}

}  // namespace

OperatorMatrix assemble_K(int N, double kappa) {
    check_params(N, kappa);
    OperatorMatrix M;
    M.N = N;
    M.kappa = kappa;
    M.tag = OpTag::K;
    ModeSet modes(N, kappa);
    const int dim = modes.dim();
    M.entries = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        double s = modes.mode(i) + kappa;
        // symbol 1/(i s) = -i/s; s never vanishes on the retained set
        M.entries(i, i) = complexd(0.0, -1.0 / s);
    }
    return M;
}

OperatorMatrix assemble_multiplier(const FourierCoeffs& d, int N, double kappa) {
    check_params(N, kappa);
    if (d.N < 2 * N)
        throw std::invalid_argument("multiplier coefficients must cover |n| <= 2N");
    OperatorMatrix M;
    M.N = N;
    M.kappa = kappa;
    M.tag = OpTag::multiplier;
    ModeSet modes(N, kappa);
    const int dim = modes.dim();
    M.entries.resize(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            M.entries(i, j) = d(modes.mode(i) - modes.mode(j));
    return M;
}

OperatorMatrix assemble_operator(const FourierCoeffs& d, int N, double kappa,
                                 bool include_K) {
    check_params(N, kappa);
    if (d.N < 2 * N)
        throw std::invalid_argument("profile coefficients must cover |n| <= 2N");
    OperatorMatrix M;
    M.N = N;
    M.kappa = kappa;
    M.tag = include_K ? OpTag::A : OpTag::A0;
    ModeSet modes(N, kappa);
    const int dim = modes.dim();
    M.entries.resize(dim, dim);
    // Row scaling by the derivative symbol i(m+kappa) annihilates the mode-0
    // convolution output at kappa = 0, so compressing to the retained set is
    // exact: no retained entry ever references the dropped row.
    for (int i = 0; i < dim; ++i) {
        complexd im(0.0, modes.mode(i) + kappa);
        for (int j = 0; j < dim; ++j)
            M.entries(i, j) = im * d(modes.mode(i) - modes.mode(j));
    }
    if (include_K) {
        for (int i = 0; i < dim; ++i) {
            double s = modes.mode(i) + kappa;
            M.entries(i, i) += complexd(0.0, -1.0 / s);
        }
    }
    return M;
}

OperatorMatrix assemble_operator(const WaveProfile& profile, int N, double kappa,
                                 bool include_K) {
    check_params(N, kappa);
    return assemble_operator(waves::profile_fourier(profile, 2 * N), N, kappa, include_K);
}

FourierVector truncate_field(std::span<const double> samples, int N, double kappa) {
    check_params(N, kappa);
    if (static_cast<int>(samples.size()) <= 2 * N)
        throw std::invalid_argument("not enough samples for the requested cutoff");
    auto c = fourier::coeffs_from_samples(samples, N);
    ModeSet modes(N, kappa);
    FourierVector v;
    v.N = N;
    v.kappa = kappa;
    v.coeffs.resize(modes.dim());
    for (int i = 0; i < modes.dim(); ++i) v.coeffs(i) = c(modes.mode(i));
    return v;
}

FourierVector apply(const OperatorMatrix& M, const FourierVector& v) {
    if (M.N != v.N || M.kappa != v.kappa)
        throw std::invalid_argument("operator/vector mode-set mismatch");
    FourierVector out;
    out.N = v.N;
    out.kappa = v.kappa;
    out.coeffs = M.entries * v.coeffs;
    return out;
}

}  // namespace ostrovsky::spectral_ops

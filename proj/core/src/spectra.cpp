#include "ostrovsky/spectra.hpp"

#include <lapacke.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace ostrovsky::spectra {

namespace {

lapack_complex_double* lp(Eigen::MatrixXcd& m) {
    return reinterpret_cast<lapack_complex_double*>(m.data());
}

}  // namespace

SpectrumResult eigenvalues(const OperatorMatrix& M) {
    const int n = M.dim();
    if (n == 0 || !M.entries.allFinite())
        throw std::invalid_argument("operator matrix must be square and finite");
    Eigen::MatrixXcd a = M.entries;  // zgeev overwrites its input
    Eigen::VectorXcd w(n);
    Eigen::MatrixXcd vr(n, n);
    int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, lp(a), n,
                             reinterpret_cast<lapack_complex_double*>(w.data()),
                             nullptr, 1, lp(vr), n);
    if (info != 0)
        throw std::runtime_error("zgeev failed to converge, info = " + std::to_string(info));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (w(i).real() != w(j).real()) return w(i).real() < w(j).real();
        return w(i).imag() < w(j).imag();
    });

    SpectrumResult r;
    r.N = M.N;
    r.kappa = M.kappa;
    r.eigenvalues.reserve(static_cast<std::size_t>(n));
    r.residuals.reserve(static_cast<std::size_t>(n));
    r.eigenvectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        int i = order[static_cast<std::size_t>(k)];
        r.eigenvalues.push_back(w(i));
        r.eigenvectors.col(k) = vr.col(i);
        double res = (M.entries * vr.col(i) - w(i) * vr.col(i)).norm() / vr.col(i).norm();
        r.residuals.push_back(res);
    }
    return r;
}

double smallest_singular(const OperatorMatrix& M, complexd lambda) {
    const int n = M.dim();
    Eigen::MatrixXcd a = M.entries;
    a.diagonal().array() -= lambda;
    Eigen::VectorXd s(n);
    // singular values only; zgesdd is markedly faster than zgesvd here
    int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', n, n, lp(a), n, s.data(),
                              nullptr, 1, nullptr, 1);
    if (info != 0)
        throw std::runtime_error("zgesdd failed, info = " + std::to_string(info));
    return s(n - 1);
}

PseudospectrumField pseudospectrum_field(const OperatorMatrix& M,
                                         std::pair<double, double> re_range,
                                         std::pair<double, double> im_range,
                                         int res_re, int res_im, int threads) {
    if (res_re < 8 || res_im < 8)
        throw std::invalid_argument("pseudospectrum resolution must be >= 8 per axis");
    PseudospectrumField f;
    f.N = M.N;
    f.re_grid.resize(static_cast<std::size_t>(res_re));
    f.im_grid.resize(static_cast<std::size_t>(res_im));
    for (int i = 0; i < res_re; ++i)
        f.re_grid[static_cast<std::size_t>(i)] =
            re_range.first + (re_range.second - re_range.first) * i / (res_re - 1);
    for (int i = 0; i < res_im; ++i)
        f.im_grid[static_cast<std::size_t>(i)] =
            im_range.first + (im_range.second - im_range.first) * i / (res_im - 1);
    f.sigma_min.resize(res_im, res_re);

    const int total = res_re * res_im;
    auto work = [&](int point) {
        int r = point / res_re;   // im index
        int c = point % res_re;   // re index
        complexd lambda(f.re_grid[static_cast<std::size_t>(c)],
                        f.im_grid[static_cast<std::size_t>(r)]);
        f.sigma_min(r, c) = smallest_singular(M, lambda);
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        for (int point = 0; point < total; ++point) work(point);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int point = next.fetch_add(1); point < total; point = next.fetch_add(1))
                    work(point);
            });
        for (auto& th : pool) th.join();
    }
    return f;
}

std::optional<std::pair<double, double>> strip_estimate(const PseudospectrumField& field,
                                                        double eps) {
    if (eps <= 0.0) throw std::invalid_argument("threshold must be positive");
    std::optional<std::pair<double, double>> out;
    for (int c = 0; c < field.sigma_min.cols(); ++c)
        for (int r = 0; r < field.sigma_min.rows(); ++r)
            if (field.sigma_min(r, c) < eps) {
                double re = field.re_grid[static_cast<std::size_t>(c)];
                if (!out)
                    out = {re, re};
                else {
                    out->first = std::min(out->first, re);
                    out->second = std::max(out->second, re);
                }
            }
    return out;
}

double compare_pseudospectra(const PseudospectrumField& a, const PseudospectrumField& b) {
    if (a.re_grid != b.re_grid || a.im_grid != b.im_grid)
        throw std::invalid_argument("pseudospectrum fields live on different grids");
    return (a.sigma_min - b.sigma_min).cwiseAbs().maxCoeff();
}

}  // namespace ostrovsky::spectra

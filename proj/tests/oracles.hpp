// Independent numerical oracles used by the unit and acceptance suites. These
// deliberately avoid the library's own FFT/LAPACK paths: quadrature is
// composite Gauss-Legendre, eigenvalues at tiny sizes come from the
// characteristic polynomial.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "ostrovsky/types.hpp"

namespace oracles {

using ostrovsky::complexd;

// 20-point Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline const std::array<std::pair<double, double>, 20>& gl20() {
    static const auto table = [] {
        std::array<std::pair<double, double>, 20> t{};
        const int n = 20;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(ostrovsky::pi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            t[static_cast<std::size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
        }
        return t;
    }();
    return table;
}

// Composite 20-point Gauss-Legendre over [a, b] split into panels.
inline complexd integrate(const std::function<complexd(double)>& f, double a, double b,
                          int panels = 64) {
    complexd acc{0.0, 0.0};
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h, mid = lo + 0.5 * h;
        for (auto& [x, w] : gl20()) acc += 0.5 * h * w * f(mid + 0.5 * h * x);
    }
    return acc;
}

// Fourier coefficient oracle: d_n = (1/2pi) int (c* - U*^p) e^{-inz} dz,
// integrated piecewise so the peak points are panel boundaries.
inline complexd peaked_coeff_oracle(int p, int n) {
    auto f = [&](double z) {
        double u = ostrovsky::pi * ostrovsky::pi / 9.0 - (3.0 * z * z - ostrovsky::pi * ostrovsky::pi) / 18.0;
        if (p == 2) {
            double up = (std::abs(z) - ostrovsky::pi / 2.0) / std::sqrt(2.0);
            u = ostrovsky::pi * ostrovsky::pi / 8.0 - up * up;
        }
        return u * std::exp(complexd(0.0, -n * z));
    };
    complexd total = integrate(f, -ostrovsky::pi, 0.0) + integrate(f, 0.0, ostrovsky::pi);
    return total / (2.0 * ostrovsky::pi);
}

// Eigenvalues of a small dense complex matrix: characteristic polynomial by
// Faddeev-LeVerrier, roots by Durand-Kerner.
inline std::vector<complexd> charpoly_eigs(const Eigen::MatrixXcd& A) {
    const int n = static_cast<int>(A.rows());
    // coefficients of lambda^n + c[1] lambda^{n-1} + ... + c[n]
    std::vector<complexd> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1.0;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        M = A * M + c[static_cast<std::size_t>(k - 1)] * Eigen::MatrixXcd::Identity(n, n);
        c[static_cast<std::size_t>(k)] = -(A * M).trace() / static_cast<double>(k);
    }
    std::vector<complexd> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        r[static_cast<std::size_t>(i)] = std::pow(complexd(0.4, 0.9), i);  // standard seeds
    auto poly = [&](complexd x) {
        complexd v = c[0];
        for (int k = 1; k <= n; ++k) v = v * x + c[static_cast<std::size_t>(k)];
        return v;
    };
    for (int it = 0; it < 500; ++it) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            complexd denom{1.0, 0.0};
            for (int j = 0; j < n; ++j)
                if (j != i)
                    denom *= r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)];
            complexd delta = poly(r[static_cast<std::size_t>(i)]) / denom;
            r[static_cast<std::size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

}  // namespace oracles

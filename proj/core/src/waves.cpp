#include "ostrovsky/waves.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ostrovsky/fourier.hpp"

namespace ostrovsky::waves {

namespace {

double reduce_period(double z) {
    // map to [-pi, pi]
    z = std::remainder(z, 2.0 * pi);
    return z;
}

// Composite Simpson mean over one period with periodic closure u_n = u_0.
double simpson_mean(std::span<const double> u) {
    const std::size_t n = u.size();
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("Simpson mean needs an even sample count");
    double acc = 0.0;
    for (std::size_t j = 0; j < n; j += 2) {
        double a = u[j];
        double b = u[j + 1];
        double c = u[(j + 2) % n];
        acc += a + 4.0 * b + c;
    }
    return acc / (3.0 * static_cast<double>(n));
}

struct ShootState {
    double u;  // profile value
    double q;  // (c - u^p) du/dz
};

// Right-hand side of the z-form system: u' = q/(c - u^p), q' = -u.
// Returns false if the trajectory leaves the smooth regime (c - u^p too small).
bool rhs(double c, int p, const ShootState& s, ShootState& ds) {
    double w = c - (p == 1 ? s.u : s.u * s.u);
    if (w < 1e-12) return false;
    ds.u = s.q / w;
    ds.q = -s.u;
    return true;
}

// Integrate from z = 0 to z = pi with fixed-step RK4, optionally recording the
// profile at the uniform nodes z_k = k*pi/half_nodes. Returns q(pi), or NaN if
// the trajectory hit the singular level c - u^p = 0.
double shoot(double c, int p, double trough, int substeps_per_node, int half_nodes,
             std::vector<double>* record) {
    ShootState s{trough, 0.0};
    if (record) {
        record->assign(static_cast<std::size_t>(half_nodes) + 1, 0.0);
        (*record)[0] = s.u;
    }
    const double h = pi / (static_cast<double>(half_nodes) * substeps_per_node);
    for (int k = 0; k < half_nodes; ++k) {
        for (int j = 0; j < substeps_per_node; ++j) {
            ShootState k1, k2, k3, k4, t;
            if (!rhs(c, p, s, k1)) return std::nan("");
            t = {s.u + 0.5 * h * k1.u, s.q + 0.5 * h * k1.q};
            if (!rhs(c, p, t, k2)) return std::nan("");
            t = {s.u + 0.5 * h * k2.u, s.q + 0.5 * h * k2.q};
            if (!rhs(c, p, t, k3)) return std::nan("");
            t = {s.u + h * k3.u, s.q + h * k3.q};
            if (!rhs(c, p, t, k4)) return std::nan("");
            s.u += (h / 6.0) * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u);
            s.q += (h / 6.0) * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
        }
        if (record) (*record)[static_cast<std::size_t>(k) + 1] = s.u;
    }
    return s.q;
}

}  // namespace

}  // namespace ostrovsky::waves

// definition lives here to keep types.hpp header-only light
double ostrovsky::WaveProfile::mean() const { return waves::simpson_mean(values); }

namespace ostrovsky::waves {

double peaked_value(int p, double z) {
    z = reduce_period(z);
    if (p == 1) return (3.0 * z * z - pi * pi) / 18.0;
    if (p == 2) return (std::abs(z) - pi / 2.0) / std::sqrt(2.0);
    throw std::invalid_argument("nonlinearity power must be 1 or 2");
}

double peaked_derivative_value(int p, double z) {
    z = reduce_period(z);
    if (p == 1) return z / 3.0;
    if (p == 2) return (z >= 0.0 ? 1.0 : -1.0) / std::sqrt(2.0);
    throw std::invalid_argument("nonlinearity power must be 1 or 2");
}

WaveProfile peaked_profile(int p, int n_samples) {
    critical_speed(p);  // validates p
    if (n_samples < 8) throw std::invalid_argument("need at least 8 samples");
    if (n_samples % 4 != 0) throw std::invalid_argument("sample count must be a multiple of 4");
    WaveProfile w;
    w.p = p;
    w.c = critical_speed(p);
    w.kind = WaveKind::peaked;
    w.grid.resize(static_cast<std::size_t>(n_samples));
    w.values.resize(static_cast<std::size_t>(n_samples));
    const double h = 2.0 * pi / n_samples;
    for (int j = 0; j < n_samples; ++j) {
        double z = -pi + j * h;
        w.grid[static_cast<std::size_t>(j)] = z;
        w.values[static_cast<std::size_t>(j)] = peaked_value(p, z);
    }
    return w;
}

SampledField peaked_derivative(int p, int n_samples) {
    critical_speed(p);
    if (n_samples < 8) throw std::invalid_argument("need at least 8 samples");
    SampledField f;
    f.grid.resize(static_cast<std::size_t>(n_samples));
    f.values.resize(static_cast<std::size_t>(n_samples));
    const double h = 2.0 * pi / n_samples;
    for (int j = 0; j < n_samples; ++j) {
        double z = -pi + (j + 0.5) * h;  // offset grid, peaks fall between nodes
        f.grid[static_cast<std::size_t>(j)] = z;
        f.values[static_cast<std::size_t>(j)] = peaked_derivative_value(p, z);
    }
    return f;
}

FourierCoeffs peaked_coefficients(int p, int N) {
    critical_speed(p);
    if (N < 2) throw std::invalid_argument("mode cutoff must be >= 2");
    FourierCoeffs d(N);
    if (p == 1) {
        // c* - U* = (pi^2 - z^2)/6
        d.at(0) = pi * pi / 9.0;
        for (int n = 1; n <= N; ++n) {
            double v = -(n % 2 == 0 ? 1.0 : -1.0) / (3.0 * n * n);
            d.at(n) = v;
            d.at(-n) = v;
        }
    } else {
        // c* - U*^2 = |z|(pi - |z|)/2
        d.at(0) = pi * pi / 12.0;
        for (int n = 1; n <= N; ++n) {
            double v = (n % 2 == 0) ? -1.0 / (static_cast<double>(n) * n) : 0.0;
            d.at(n) = v;
            d.at(-n) = v;
        }
    }
    return d;
}

SmoothWaveResult smooth_wave_solve(double c, int p, double tol, int n_samples) {
    const double cs = critical_speed(p);
    if (!(c > 1.0 && c < cs)) throw std::domain_error("no smooth wave: speed must lie in (1, c*)");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (n_samples < 16 || n_samples % 4 != 0)
        throw std::invalid_argument("sample count must be a multiple of 4, >= 16");

    const int half_nodes = n_samples / 2;
    const int substeps = std::max(1, 8192 / half_nodes);

    // The even solution has its trough at z = 0 and crest at z = pi; the
    // shooting mismatch is q(pi) = (c - u^p) u'(pi), zero at the periodic wave.
    const double bound = (p == 1) ? -0.5 * c : -std::sqrt(c);
    double lo = bound * (1.0 - 1e-9);  // deepest trough, near the singular level
    double hi = -1e-6 * c;             // near-zero amplitude
    auto mismatch = [&](double trough) {
        double q = shoot(c, p, trough, substeps, half_nodes, nullptr);
        // Hitting the singular level means the crest was overshot.
        return std::isnan(q) ? -1.0 : q;
    };
    double flo = mismatch(lo);
    double fhi = mismatch(hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::runtime_error("shooting bracket failed for the smooth wave");
    double slope = (fhi - flo) / (hi - lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::abs(bound); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = mismatch(mid);
        if (fm == 0.0) { lo = hi = mid; break; }
        if (fm < 0.0) {
            slope = (fhi - fm) / (hi - mid);
            lo = mid; flo = fm;
        } else {
            slope = (fm - flo) / (mid - lo);
            hi = mid; fhi = fm;
        }
    }
    const double trough = 0.5 * (lo + hi);

    std::vector<double> half;
    shoot(c, p, trough, substeps, half_nodes, &half);

    WaveProfile w;
    w.p = p;
    w.c = c;
    w.kind = WaveKind::smooth;
    w.grid.resize(static_cast<std::size_t>(n_samples));
    w.values.resize(static_cast<std::size_t>(n_samples));
    const double h = 2.0 * pi / n_samples;
    for (int j = 0; j < n_samples; ++j) {
        double z = -pi + j * h;
        w.grid[static_cast<std::size_t>(j)] = z;
        int k = std::abs(j - half_nodes);  // even profile: U(z) = U(|z|)
        w.values[static_cast<std::size_t>(j)] = half[static_cast<std::size_t>(k)];
    }

    // Residual of d/dz[(c - U^p) dU/dz] + U = 0 by spectral differentiation.
    auto du = fourier::derivative(w.values, 1);
    std::vector<double> flux(w.values.size());
    for (std::size_t j = 0; j < w.values.size(); ++j) {
        double u = w.values[j];
        flux[j] = (c - (p == 1 ? u : u * u)) * du[j];
    }
    auto dflux = fourier::derivative(flux, 1);
    double res = 0.0;
    for (std::size_t j = 0; j < w.values.size(); ++j)
        res = std::max(res, std::abs(dflux[j] + w.values[j]));
    if (res > tol)
        throw std::runtime_error("smooth wave residual " + std::to_string(res) +
                                 " exceeds tolerance");
    return SmoothWaveResult{std::move(w), res, trough, slope};
}

FourierCoeffs profile_fourier(const WaveProfile& profile, int N) {
    if (N < 2) throw std::invalid_argument("mode cutoff must be >= 2");
    if (profile.kind == WaveKind::peaked) return peaked_coefficients(profile.p, N);
    // Smooth profile: oversample by trigonometric interpolation, form c - u^p
    // in physical space, transform back.
    const int n = static_cast<int>(profile.values.size());
    const int M = (n - 1) / 2;
    auto cu = fourier::coeffs_from_samples(std::span<const double>(profile.values), M);
    int fine = 4 * std::max(n, 2 * N + 2);
    auto u = fourier::synthesize_real(cu, fine);
    std::vector<double> g(u.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        g[j] = profile.c - (profile.p == 1 ? u[j] : u[j] * u[j]);
    return fourier::coeffs_from_samples(std::span<const double>(g), N);
}

BreakingField breaking_indicator(std::span<const double> u, int p) {
    critical_speed(p);
    if (u.size() < 16) throw std::invalid_argument("need at least 16 samples");
    BreakingField b;
    const int n = static_cast<int>(u.size());
    const double h = 2.0 * pi / n;
    b.grid.resize(u.size());
    for (int j = 0; j < n; ++j) b.grid[static_cast<std::size_t>(j)] = -pi + j * h;
    if (p == 1) {
        auto upp = fourier::derivative(u, 2);
        b.values.resize(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) b.values[j] = 1.0 - 3.0 * upp[j];
    } else {
        auto up = fourier::derivative(u, 1);
        b.values.resize(u.size());
        for (std::size_t j = 0; j < u.size(); ++j)
            b.values[j] = 1.0 - std::sqrt(2.0) * std::abs(up[j]);
    }
    b.sign_definite = *std::min_element(b.values.begin(), b.values.end()) > 0.0;
    return b;
}

}  // namespace ostrovsky::waves

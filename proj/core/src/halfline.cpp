#include "ostrovsky/halfline.hpp"

#include <algorithm>
#include <cmath>

#include "ostrovsky/fourier.hpp"

namespace ostrovsky::halfline {

namespace {

constexpr double slope_delta = 1e-3;  // decay test margin on the endpoint log-slope

void check_uniform(const std::vector<double>& grid) {
    if (grid.size() < 9) throw std::invalid_argument("half-line grid too coarse");
    if (grid.size() % 2 == 0) throw std::invalid_argument("half-line grid needs an odd point count");
}

double grid_step(const std::vector<double>& grid) {
    return (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
}

// Composite Simpson over a uniform grid with an odd number of points.
complexd simpson(const std::vector<double>& grid, const std::vector<complexd>& v) {
    const std::size_t n = v.size();
    const double h = grid_step(grid);
    complexd acc = v[0] + v[n - 1];
    for (std::size_t j = 1; j + 1 < n; ++j) acc += (j % 2 == 1 ? 4.0 : 2.0) * v[j];
    return acc * (h / 3.0);
}

// Cumulative integral from the right: R[j] = int_{y_j}^{Y} phi dy, built from
// fourth-order per-interval quadrature (cubic through four neighbors).
std::vector<complexd> cumulative_from_right(const std::vector<double>& grid,
                                            const std::vector<complexd>& phi) {
    const std::size_t n = phi.size();
    const double h = grid_step(grid);
    std::vector<complexd> R(n);
    R[n - 1] = 0.0;
    auto interval = [&](std::size_t j) {  // int over [y_j, y_{j+1}]
        if (j == 0)
            return (h / 24.0) * (9.0 * phi[0] + 19.0 * phi[1] - 5.0 * phi[2] + phi[3]);
        if (j + 2 >= n)
            return (h / 24.0) *
                   (9.0 * phi[n - 1] + 19.0 * phi[n - 2] - 5.0 * phi[n - 3] + phi[n - 4]);
        return (h / 24.0) * (-phi[j - 1] + 13.0 * phi[j] + 13.0 * phi[j + 1] - phi[j + 2]);
    };
    for (std::size_t j = n - 1; j-- > 0;) R[j] = R[j + 1] + interval(j);
    return R;
}

// Decay at both endpoints, judged by the log-magnitude slope over roughly one
// unit of y at each end. This is a direction test (heading to zero), robust to
// the finite window: an exponentially growing tail always fails it.
bool decays_both_ends(const std::vector<double>& grid, const std::vector<complexd>& v) {
    const double h = grid_step(grid);
    const std::size_t n = v.size();
    const std::size_t K = std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(1.0 / h)));
    if (K + 1 >= n) return false;
    auto lg = [](const complexd& x) { return std::log(std::max(std::abs(x), 1e-300)); };
    double slope_right = (lg(v[n - 1]) - lg(v[n - 1 - K])) / (static_cast<double>(K) * h);
    double slope_left = (lg(v[K]) - lg(v[0])) / (static_cast<double>(K) * h);
    return slope_right < -slope_delta && slope_left > slope_delta;
}

}  // namespace

std::vector<double> default_grid(double Y, double step) {
    if (Y < 33.0) throw std::invalid_argument("truncation radius must be >= 33");
    if (step <= 0.0) throw std::invalid_argument("step must be positive");
    auto half = static_cast<std::size_t>(std::lround(Y / step));
    std::vector<double> g(2 * half + 1);
    for (std::size_t j = 0; j < g.size(); ++j)
        g[j] = (static_cast<double>(j) - static_cast<double>(half)) * step;
    return g;
}

complexd mu_from_lambda(complexd lambda, int p) {
    if (p == 1) return 6.0 / pi * lambda;
    if (p == 2) return 4.0 / pi * lambda;
    throw std::invalid_argument("nonlinearity power must be 1 or 2");
}

MuClassification classify_mu(complexd mu) {
    double re = std::abs(mu.real());
    MuRegion r = re > 1.0 ? MuRegion::resolvent
                          : (re < 1.0 ? MuRegion::residual : MuRegion::continuous);
    return {mu, r};
}

HalflineFunction kernel_solution(complexd mu, const std::vector<double>& grid) {
    check_uniform(grid);
    HalflineFunction w;
    w.Y = grid.back();
    w.grid = grid;
    w.values.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        w.values[j] = std::cosh(grid[j]) * std::exp(mu * grid[j]);
    w.decay_flag = decays_both_ends(grid, w.values);
    return w;
}

HalflineFunction adjoint_kernel(complexd mu, const std::vector<double>& grid) {
    check_uniform(grid);
    HalflineFunction w;
    w.Y = grid.back();
    w.grid = grid;
    w.values.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        w.values[j] = std::exp(-mu * grid[j]) / std::cosh(grid[j]);
    w.decay_flag = decays_both_ends(grid, w.values);
    return w;
}

double l2_norm(const HalflineFunction& f) {
    std::vector<complexd> sq(f.values.size());
    for (std::size_t j = 0; j < sq.size(); ++j) sq[j] = std::norm(f.values[j]);
    return std::sqrt(simpson(f.grid, sq).real());
}

complexd sech_moment(const HalflineFunction& f) {
    std::vector<complexd> g(f.values.size());
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = f.values[j] / std::cosh(f.grid[j]);
    return simpson(f.grid, g);
}

double resolvent_bound(complexd mu) {
    double m = std::abs(mu.real());
    if (m <= 1.0) throw std::domain_error("resolvent bound defined for |Re mu| > 1 only");
    return 1.0 / (2.0 * (m - 1.0)) + 2.0 / (m + 1.0) + 2.0 / (m - 1.0);
}

HalflineFunction resolvent_solve(complexd mu, const HalflineFunction& f) {
    check_uniform(f.grid);
    if (std::abs(mu.real()) <= 1.0)
        throw std::domain_error("resolvent formula valid only for |Re mu| > 1");
    double proj = std::abs(sech_moment(f));
    if (proj > 1e-10 * std::max(1.0, l2_norm(f)))
        throw std::invalid_argument("input violates the <f, sech> = 0 constraint");

    const std::size_t n = f.grid.size();
    if (mu.real() < 0.0) {
        // mirror identity: w(y; mu, f) = v(-y) where (B0 + (-mu)) v = -f(-.)
        HalflineFunction fr;
        fr.Y = f.Y;
        fr.grid = f.grid;
        fr.values.resize(n);
        for (std::size_t j = 0; j < n; ++j) fr.values[j] = -f.values[n - 1 - j];
        HalflineFunction v = resolvent_solve(-mu, fr);
        std::reverse(v.values.begin(), v.values.end());
        v.decay_flag = decays_both_ends(v.grid, v.values);
        return v;
    }

    // w(y) = -cosh(y) e^{mu y} int_y^{inf} e^{-mu y'} f(y') / cosh(y') dy';
    // the tail beyond Y is below e^{-(Re mu + 1) Y} and is dropped.
    std::vector<complexd> phi(n);
    for (std::size_t j = 0; j < n; ++j)
        phi[j] = std::exp(-mu * f.grid[j]) * f.values[j] / std::cosh(f.grid[j]);
    auto R = cumulative_from_right(f.grid, phi);

    HalflineFunction w;
    w.Y = f.Y;
    w.grid = f.grid;
    w.values.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        w.values[j] = -std::cosh(f.grid[j]) * std::exp(mu * f.grid[j]) * R[j];
    w.decay_flag = decays_both_ends(w.grid, w.values);
    if (!w.decay_flag) throw std::runtime_error("resolvent quadrature produced a non-decaying solution");
    return w;
}

double ode_residual(complexd mu, const HalflineFunction& w, const HalflineFunction& f) {
    if (w.grid != f.grid) throw std::invalid_argument("grids differ");
    const std::size_t n = w.grid.size();
    const double h = grid_step(w.grid);
    double worst = 0.0;
    for (std::size_t j = 2; j + 2 < n; ++j) {
        complexd dw = (-w.values[j + 2] + 8.0 * w.values[j + 1] - 8.0 * w.values[j - 1] +
                       w.values[j - 2]) /
                      (12.0 * h);
        complexd r = dw - (std::tanh(w.grid[j]) + mu) * w.values[j] - f.values[j];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

ConstraintValues residual_constraints(complexd mu, const HalflineFunction& f) {
    check_uniform(f.grid);
    if (std::abs(mu.real()) >= 1.0)
        throw std::domain_error("constraints apply in the region |Re mu| < 1");
    const std::size_t n = f.grid.size();
    std::vector<complexd> g(n);
    for (std::size_t j = 0; j < n; ++j)
        g[j] = std::exp(-mu * f.grid[j]) * f.values[j] / std::cosh(f.grid[j]);
    ConstraintValues out;
    out.primary = simpson(f.grid, g);
    if (std::abs(mu) < 1e-14) {
        // G(y) = int_{+inf}^y sech(y') f(y') dy'; the secondary functional is
        // its integral over the line.
        std::vector<complexd> sf(n);
        for (std::size_t j = 0; j < n; ++j) sf[j] = f.values[j] / std::cosh(f.grid[j]);
        auto R = cumulative_from_right(f.grid, sf);
        std::vector<complexd> G(n);
        for (std::size_t j = 0; j < n; ++j) G[j] = -R[j];
        out.secondary = simpson(f.grid, G);
    }
    return out;
}

double y_from_xi(int p, double xi) {
    if (p == 1) return pi * xi / 6.0;
    if (p == 2) return pi * xi / 4.0;
    throw std::invalid_argument("nonlinearity power must be 1 or 2");
}

MappedPoints coordinate_map(MapDirection direction, int p, int branch,
                            const std::vector<double>& pts) {
    if (p != 1 && p != 2) throw std::invalid_argument("nonlinearity power must be 1 or 2");
    if (p == 1 && branch != 1) throw std::invalid_argument("p=1 map has a single branch");
    if (p == 2 && branch != 1 && branch != -1)
        throw std::invalid_argument("branch must be +1 or -1");
    MappedPoints out;
    out.points.reserve(pts.size());
    out.jacobian.reserve(pts.size());
    auto jac = [&](double z) {
        return p == 1 ? (pi * pi - z * z) / 6.0 : std::abs(z) * (pi - std::abs(z)) / 2.0;
    };
    for (double x : pts) {
        double z;
        if (direction == MapDirection::forward) {
            if (!std::isfinite(x)) throw std::invalid_argument("xi must be finite");
            if (p == 1) {
                z = pi * std::tanh(pi * x / 6.0);
            } else if (branch == 1) {
                z = pi / (1.0 + std::exp(-pi * x / 2.0));
            } else {
                z = -pi / (1.0 + std::exp(pi * x / 2.0));
            }
            out.points.push_back(z);
        } else {
            z = x;
            double xi;
            if (p == 1) {
                if (std::abs(z) >= pi) throw std::domain_error("inverse map singular at |z| = pi");
                xi = 6.0 / pi * std::atanh(z / pi);
            } else if (branch == 1) {
                if (z <= 0.0 || z >= pi) throw std::domain_error("branch + needs z in (0, pi)");
                xi = 2.0 / pi * std::log(z / (pi - z));
            } else {
                if (z <= -pi || z >= 0.0) throw std::domain_error("branch - needs z in (-pi, 0)");
                xi = 2.0 / pi * std::log(-(pi + z) / z);
            }
            out.points.push_back(xi);
        }
        out.jacobian.push_back(jac(z));
    }
    return out;
}

TransformedField transform_field(std::span<const double> v, int p,
                                 const std::vector<double>& grid) {
    check_uniform(grid);
    const int nv = static_cast<int>(v.size());
    if (nv < 16) throw std::invalid_argument("need at least 16 samples of v");
    auto cv = fourier::coeffs_from_samples(v, (nv - 1) / 2);

    auto build = [&](auto&& z_of_y) {
        HalflineFunction w;
        w.Y = grid.back();
        w.grid = grid;
        w.values.resize(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) {
            double y = grid[j];
            w.values[j] = fourier::evaluate(cv, z_of_y(y)) / std::cosh(y);
        }
        w.decay_flag = decays_both_ends(w.grid, w.values);
        return w;
    };

    TransformedField out;
    if (p == 1) {
        out.w_plus = build([](double y) { return pi * std::tanh(y); });
    } else if (p == 2) {
        out.w_plus = build([](double y) { return pi / (1.0 + std::exp(-2.0 * y)); });
        out.w_minus = build([](double y) { return -pi / (1.0 + std::exp(2.0 * y)); });
    } else {
        throw std::invalid_argument("nonlinearity power must be 1 or 2");
    }
    return out;
}

}  // namespace ostrovsky::halfline

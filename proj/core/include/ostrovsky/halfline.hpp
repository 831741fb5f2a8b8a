#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ostrovsky/types.hpp"

namespace ostrovsky::halfline {

/// Complex function sampled on a uniform grid over [-Y, Y].
struct HalflineFunction {
    double Y = 0.0;
    std::vector<double> grid;
    std::vector<complexd> values;
    bool decay_flag = false;  // decays toward both endpoints (log-slope test)
};

enum class MuRegion { resolvent, residual, continuous };

struct MuClassification {
    complexd mu;
    MuRegion region;
};

/// Uniform grid over [-Y, Y]. Y must be >= 33 so that sech(Y) < 1e-14.
std::vector<double> default_grid(double Y = 35.0, double step = 1e-3);

/// Spectral-parameter scaling mu = 6 lambda / pi (p=1) or 4 lambda / pi (p=2).
complexd mu_from_lambda(complexd lambda, int p);

/// Region of mu for the constrained operator B0 = d/dy - tanh(y): resolvent
/// set for |Re mu| > 1, residual spectrum for |Re mu| < 1, continuous spectrum
/// on |Re mu| = 1. Invariant under shifts of Im mu.
MuClassification classify_mu(complexd mu);

/// Kernel candidate cosh(y) e^{mu y} of B0 - mu. Never decays at both ends.
HalflineFunction kernel_solution(complexd mu, const std::vector<double>& grid);

/// Adjoint kernel e^{-mu y} sech(y); decays at both ends iff |Re mu| < 1.
HalflineFunction adjoint_kernel(complexd mu, const std::vector<double>& grid);

/// Solve (B0 - mu) w = f for |Re mu| > 1 by the explicit quadrature
/// w(y) = int_{+inf}^y e^{mu(y-y')} cosh(y)/cosh(y') f(y') dy'
/// (mirror formula for Re mu < -1). Requires <f, sech> = 0 within 1e-10.
HalflineFunction resolvent_solve(complexd mu, const HalflineFunction& f);

/// Pointwise residual of w' - tanh(y) w - mu w = f on interior nodes
/// (five-point derivative stencil); returns the max norm.
double ode_residual(complexd mu, const HalflineFunction& w, const HalflineFunction& f);

/// L^2 norm over the grid by composite Simpson.
double l2_norm(const HalflineFunction& f);

/// Inner product <f, sech> by composite Simpson.
complexd sech_moment(const HalflineFunction& f);

/// Resolvent-bound constant from the region |Re mu| > 1:
/// C_mu = 1/(2(m-1)) + 2/(m+1) + 2/(m-1) with m = |Re mu|.
double resolvent_bound(complexd mu);

struct ConstraintValues {
    complexd primary;                   // int e^{-mu y} sech(y) f(y) dy
    std::optional<complexd> secondary;  // mu = 0 only: int (int_{+inf}^y sech f) dy
};

/// Solvability functionals for |Re mu| < 1 (residual-spectrum region).
ConstraintValues residual_constraints(complexd mu, const HalflineFunction& f);

enum class MapDirection { forward, inverse };

struct MappedPoints {
    std::vector<double> points;    // z (forward) or xi (inverse)
    std::vector<double> jacobian;  // dz/dxi = (c* - U*^p)(z) at the image
};

/// Coordinate change between xi on the line and z on the period.
/// p=1: z = pi tanh(pi xi / 6), one branch (pass branch = +1).
/// p=2: z_+ = pi e^{pi xi/2}/(1 + e^{pi xi/2}) for branch +1 (image (0, pi)),
///      z_- = -pi/(1 + e^{pi xi/2}) for branch -1 (image (-pi, 0)).
MappedPoints coordinate_map(MapDirection direction, int p, int branch,
                            const std::vector<double>& pts);

/// y as a function of xi: pi xi / 6 (p=1) or pi xi / 4 (p=2).
double y_from_xi(int p, double xi);

struct TransformedField {
    HalflineFunction w_plus;                   // the only piece for p=1
    std::optional<HalflineFunction> w_minus;   // present for p=2
};

/// Pull a periodic field v(z) (samples on the uniform z-grid) to the line via
/// v(z) = cosh(y) w(y), using trigonometric interpolation of v.
TransformedField transform_field(std::span<const double> v, int p,
                                 const std::vector<double>& grid);

}  // namespace ostrovsky::halfline

#pragma once

#include <functional>
#include <vector>

#include "ostrovsky/types.hpp"

namespace ostrovsky::pointspec {

/// Closed-form solution data of the spectral ODE at a given lambda.
struct EigenOdeSolution {
    complexd lambda;
    int p = 1;
    std::vector<double> grid;
    std::vector<complexd> f1_samples;       // first solution: 2z+3lambda / sign(z)
    std::vector<complexd> g_prime_samples;  // second-solution derivative factor
    std::vector<bool> skipped;              // nodes where the closed form is singular
    double exponent_plus = 0.0;             // fitted log-log slope near z = +pi
    double exponent_minus = 0.0;            // fitted near z = -pi
    double predicted_plus = 0.0;            // analytic exponents for comparison
    double predicted_minus = 0.0;
};

/// Evaluate the closed-form ODE solutions on a grid avoiding z = +-pi
/// (and z = 0 for p=2); fit the endpoint exponents of |g'|.
EigenOdeSolution eigen_ode_solutions(complexd lambda, int p, const std::vector<double>& grid);

/// A candidate field evaluated on any requested grid (membership testing
/// refines grids, so the candidate must be re-samplable).
using FieldGenerator = std::function<std::vector<complexd>(const std::vector<double>&)>;

struct MembershipResult {
    bool member = false;
    double mean_abs = 0.0;       // |quadrature mean|
    std::vector<double> norms;   // L2 norms of d/dz[(c - U^p) f] per refinement
    double max_ratio = 0.0;      // worst successive-refinement ratio
};

/// Test f in dom(A): zero quadrature mean and stabilization of the norm of
/// d/dz[(c - U*^p) f] on dyadic offset grids 64*2^k, k = 0..4 (ratio <= 1.1).
MembershipResult domain_membership(const FieldGenerator& f, int p);

struct ScanEntry {
    complexd lambda;
    bool mean_ok = false;
    bool member = false;
    double eigen_residual = -1.0;  // low-mode Galerkin residual, -1 if not reached
    bool admissible = false;
};

struct ScanResult {
    std::vector<complexd> admissible;
    std::vector<ScanEntry> entries;
};

/// For each lambda, test the solution space of the spectral ODE for a nonzero
/// member of dom(A) that also satisfies the eigenvalue relation at the
/// Galerkin level. Only lambda = 0 should survive.
ScanResult point_spectrum_scan(const std::vector<complexd>& lambda_grid, int p, int N = 256);

}  // namespace ostrovsky::pointspec

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ostrovsky/types.hpp"

namespace ostrovsky::evolution {

struct EvolutionTrace {
    std::vector<double> times;
    std::vector<double> norms;       // L2 norm at each recorded time
    std::vector<double> max_slope;   // max |u_x| (nonlinear runs)
    std::vector<std::pair<double, std::vector<double>>> snapshots;
    double mass_drift = 0.0;         // max |mean u| seen (nonlinear)
    double l2_drift = 0.0;           // max relative L2 deviation (nonlinear)
    bool overflow = false;           // linear run stopped on norm overflow
    bool breaking = false;
    double breaking_time = -1.0;
};

/// RK4 for v' = M v in coefficient space; records the coefficient norm at
/// every step. Stops early with overflow flag when the norm exceeds 1e12
/// times its initial value.
EvolutionTrace evolve_linear(const OperatorMatrix& M, const FourierVector& v0,
                             double dt, double T);

struct GrowthFit {
    double rate = 0.0;
    double r2 = 1.0;  // fit quality; below ~0.99 the trace is not exponential
};

/// Least-squares slope of log(norm) vs time over the trailing window fraction.
GrowthFit growth_rate_fit(const EvolutionTrace& trace, double window);

/// Pseudospectral RK4 for u_t = -d/dx(u^{p+1}/(p+1)) + dx^{-1} u with 2/3
/// dealiasing; dt is capped each step by the CFL rule max|u| * (n/2) * dt <= 0.5.
/// Stops at T or at breaking (max|u_x| > 50x its initial value).
EvolutionTrace evolve_nonlinear(std::span<const double> u0, int p, double dt, double T,
                                int snapshot_count = 16);

/// Earliest recorded time with max|u_x| > threshold * its initial value.
std::optional<double> breaking_detect(const EvolutionTrace& trace, double threshold);

enum class InitialKind { peaked_perturbed, smooth_wave, random_zero_mean };

struct InitialParams {
    int p = 1;
    int n = 256;              // sample count
    double c = 0.0;           // smooth_wave speed
    double amplitude = 0.0;   // peaked_perturbed sin(z) amplitude
};

/// Reproducible zero-mean initial field on the standard z-grid.
std::vector<double> make_initial_data(InitialKind kind, const InitialParams& params,
                                      std::uint64_t seed);

/// Reproducible random zero-mean coefficient vector (real-field symmetry,
/// mildly decaying mode amplitudes) for linear runs.
FourierVector make_initial_coeffs(int N, double kappa, std::uint64_t seed);

}  // namespace ostrovsky::evolution

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ostrovsky/evolution.hpp"
#include "ostrovsky/fourier.hpp"
#include "ostrovsky/spectra.hpp"
#include "ostrovsky/spectral_ops.hpp"
#include "ostrovsky/waves.hpp"

using namespace ostrovsky;
using namespace ostrovsky::evolution;

namespace {

EvolutionTrace synthetic(const std::function<double(double)>& norm_of_t, double T, double dt) {
    EvolutionTrace tr;
    for (double t = 0.0; t <= T + 1e-12; t += dt) {
        tr.times.push_back(t);
        tr.norms.push_back(norm_of_t(t));
    }
    return tr;
}

OperatorMatrix jordanish() {
    OperatorMatrix M;
    M.N = 1;
    M.kappa = 0.25;  // mode set {-1, 0, 1}; only the size matters here
    M.entries = Eigen::MatrixXcd::Zero(3, 3);
    M.entries(0, 0) = M.entries(1, 1) = M.entries(2, 2) = 0.3;
    M.entries(0, 1) = 1.0;
    return M;
}

}  // namespace

TEST_CASE("growth-rate fit on synthetic traces") {
    auto pure = synthetic([](double t) { return std::exp(0.5 * t); }, 10.0, 0.01);
    auto f = growth_rate_fit(pure, 1.0);
    CHECK(f.rate == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.r2 > 0.999999);

    auto flat = synthetic([](double) { return 3.0; }, 10.0, 0.01);
    CHECK(growth_rate_fit(flat, 1.0).rate == doctest::Approx(0.0));

    auto wobble =
        synthetic([](double t) { return std::exp(0.5 * t) * (2.0 + std::sin(t)); }, 40.0, 0.01);
    CHECK(growth_rate_fit(wobble, 0.5).rate == doctest::Approx(0.5).epsilon(0.04));

    CHECK_THROWS(growth_rate_fit(synthetic([](double) { return 1.0; }, 0.05, 0.01), 1.0));
}

TEST_CASE("linear stepper is fourth-order accurate") {
    auto M = jordanish();
    FourierVector v0;
    v0.N = 1;
    v0.kappa = 0.25;
    v0.coeffs = Eigen::VectorXcd::Zero(3);
    v0.coeffs << 1.0, 1.0, 0.0;
    const double T = 4.0;
    // exact: v = e^{0.3 t} (v1 + t v2, v2, 0)
    double exact = std::exp(0.3 * T) * std::sqrt((1.0 + T) * (1.0 + T) + 1.0);
    double e1 = std::abs(evolve_linear(M, v0, 0.1, T).norms.back() - exact);
    double e2 = std::abs(evolve_linear(M, v0, 0.05, T).norms.back() - exact);
    CHECK(e1 / e2 > 12.0);
}

TEST_CASE("skew flow preserves the norm") {
    auto K = spectral_ops::assemble_K(8, 0.0);
    auto v0 = make_initial_coeffs(8, 0.0, 3);
    auto tr = evolve_linear(K, v0, 0.01, 10.0);
    for (double n : tr.norms) CHECK(n == doctest::Approx(tr.norms.front()).epsilon(1e-6));
    CHECK_FALSE(tr.overflow);
}

TEST_CASE("overflow guard stops runaway growth") {
    FourierCoeffs d(16);
    d.at(0) = 2.5;
    auto M = spectral_ops::assemble_multiplier(d, 8);  // v' = 2.5 v
    auto v0 = make_initial_coeffs(8, 0.0, 1);
    auto tr = evolve_linear(M, v0, 0.05, 40.0);
    CHECK(tr.overflow);
    CHECK(tr.times.back() < 13.0);  // e^{2.5 t} passes 1e12 near t = 11
    CHECK(tr.norms.back() > 1e12 * tr.norms.front());
}

TEST_CASE("eigenvector data grows at exactly its eigenvalue rate") {
    auto A = spectral_ops::assemble_operator(waves::peaked_coefficients(1, 64), 32, 0.0, true);
    auto s = spectra::eigenvalues(A);
    std::size_t top = 0;
    for (std::size_t j = 1; j < s.eigenvalues.size(); ++j)
        if (s.eigenvalues[j].real() > s.eigenvalues[top].real()) top = j;
    FourierVector v0;
    v0.N = 32;
    v0.kappa = 0.0;
    v0.coeffs = s.eigenvectors.col(static_cast<int>(top));
    auto tr = evolve_linear(A, v0, 0.01, 20.0);
    auto f = growth_rate_fit(tr, 0.5);
    CHECK(std::abs(f.rate - s.eigenvalues[top].real()) <= 1e-3);

    // truncated kernel data and random data both stay near the spectral abscissa
    // once transients die out
    FourierVector k0 = v0;
    ModeSet modes(32, 0.0);
    for (int i = 0; i < modes.dim(); ++i) {
        int n = modes.mode(i);
        k0.coeffs(i) = (n % 2 == 0 ? -1.0 : 1.0) / (3.0 * complexd(0.0, n));
    }
    auto trk = evolve_linear(A, k0, 0.01, 40.0);
    CHECK(std::abs(growth_rate_fit(trk, 0.3).rate) < 0.05);

    auto trr = evolve_linear(A, make_initial_coeffs(32, 0.0, 9), 0.01, 40.0);
    CHECK(growth_rate_fit(trr, 0.3).rate <= s.eigenvalues[top].real() + 0.02);
}

TEST_CASE("nonlinear conservation on small data") {
    const int n = 256;
    std::vector<double> u0(n);
    for (int j = 0; j < n; ++j)
        u0[static_cast<std::size_t>(j)] = 0.05 * std::sin(-pi + 2.0 * pi * j / n);
    auto tr = evolve_nonlinear(u0, 1, 1e-3, 20.0);
    CHECK_FALSE(tr.breaking);
    CHECK(tr.mass_drift <= 1e-10);
    CHECK(tr.l2_drift <= 1e-6);
    CHECK(tr.times.back() == doctest::Approx(20.0).epsilon(1e-6));
    CHECK_FALSE(breaking_detect(tr, 50.0).has_value());

    CHECK_THROWS(evolve_nonlinear(std::vector<double>(100, 0.0), 1, 1e-3, 1.0));  // not 2^k
    std::vector<double> biased(256, 1.0);
    CHECK_THROWS(evolve_nonlinear(biased, 1, 1e-3, 1.0));  // nonzero mean
}

TEST_CASE("smooth wave translates at its own speed") {
    InitialParams ip;
    ip.p = 1;
    ip.n = 512;
    ip.c = 1.05;
    auto u0 = make_initial_data(InitialKind::smooth_wave, ip, 0);
    auto tr = evolve_nonlinear(u0, 1, 1e-3, 5.0, 8);
    REQUIRE(!tr.snapshots.empty());
    double tf = tr.snapshots.back().first;
    auto& uf = tr.snapshots.back().second;

    auto c0 = fourier::coeffs_from_samples(std::span<const double>(u0), 128);
    for (int k = -128; k <= 128; ++k)
        c0.at(k) *= std::exp(complexd(0.0, -k * ip.c * tf));
    double worst = 0.0, amp = 0.0;
    for (int j = 0; j < 512; ++j) {
        double z = -pi + 2.0 * pi * j / 512;
        worst = std::max(worst, std::abs(fourier::evaluate(c0, z).real() -
                                         uf[static_cast<std::size_t>(j)]));
        amp = std::max(amp, std::abs(u0[static_cast<std::size_t>(j)]));
    }
    CHECK(worst / amp <= 1e-4);
}

TEST_CASE("perturbed peaked wave breaks") {
    InitialParams ip;
    ip.p = 1;
    ip.n = 512;
    ip.amplitude = 0.01;
    auto u0 = make_initial_data(InitialKind::peaked_perturbed, ip, 0);
    auto tr = evolve_nonlinear(u0, 1, 2e-3, 15.0, 4);
    CHECK(tr.breaking);
    CHECK(tr.breaking_time == doctest::Approx(8.6605).epsilon(0.02));  // frozen run value
    auto d = breaking_detect(tr, 50.0);
    REQUIRE(d.has_value());
    CHECK(*d == doctest::Approx(tr.breaking_time));
}

TEST_CASE("breaking detector on a synthetic slope history") {
    EvolutionTrace tr;
    const double a = 1.0;
    for (double t = 0.0; t < 0.985; t += 1e-3) {
        tr.times.push_back(t);
        tr.norms.push_back(1.0);
        tr.max_slope.push_back(a / (1.0 - a * t));  // Burgers characteristics
    }
    auto d = breaking_detect(tr, 50.0);
    REQUIRE(d.has_value());
    CHECK(*d == doctest::Approx(0.98).epsilon(0.01));
    CHECK_FALSE(breaking_detect(tr, 500.0).has_value());
}

TEST_CASE("initial data generation is reproducible") {
    InitialParams ip;
    ip.p = 1;
    ip.n = 256;
    ip.amplitude = 0.02;
    auto a = make_initial_data(InitialKind::peaked_perturbed, ip, 7);
    auto b = make_initial_data(InitialKind::peaked_perturbed, ip, 7);
    CHECK(a == b);

    ip.amplitude = 0.0;
    auto bare = make_initial_data(InitialKind::peaked_perturbed, ip, 7);
    for (int j = 0; j < 256; ++j)
        CHECK(bare[static_cast<std::size_t>(j)] ==
              doctest::Approx(waves::peaked_value(1, -pi + 2.0 * pi * j / 256)).epsilon(1e-12));

    auto r1 = make_initial_data(InitialKind::random_zero_mean, ip, 7);
    auto r2 = make_initial_data(InitialKind::random_zero_mean, ip, 7);
    auto r3 = make_initial_data(InitialKind::random_zero_mean, ip, 8);
    CHECK(r1 == r2);
    CHECK(r1 != r3);
    double mean = 0.0;
    for (double x : r1) mean += x;
    CHECK(std::abs(mean / 256.0) < 1e-12);

    auto v1 = make_initial_coeffs(16, 0.0, 4);
    auto v2 = make_initial_coeffs(16, 0.0, 4);
    CHECK((v1.coeffs - v2.coeffs).norm() == 0.0);
    ModeSet m(16, 0.0);
    for (int k = 1; k <= 16; ++k)
        CHECK(std::abs(v1.coeffs(m.index(-k)) - std::conj(v1.coeffs(m.index(k)))) < 1e-15);
}

#include <doctest.h>

#include <cmath>

#include "ostrovsky/fourier.hpp"
#include "ostrovsky/waves.hpp"
#include "oracles.hpp"

using namespace ostrovsky;

TEST_CASE("peaked closed forms") {
    CHECK(critical_speed(1) == doctest::Approx(pi * pi / 9.0).epsilon(1e-15));
    CHECK(critical_speed(2) == doctest::Approx(pi * pi / 8.0).epsilon(1e-15));
    CHECK(waves::peaked_value(1, 0.0) == doctest::Approx(-pi * pi / 18.0));
    CHECK(waves::peaked_value(1, pi) == doctest::Approx(pi * pi / 9.0));
    CHECK(waves::peaked_value(2, 0.0) == doctest::Approx(-pi / (2.0 * std::sqrt(2.0))));
    CHECK(waves::peaked_value(2, pi / 2.0) == doctest::Approx(0.0));
    CHECK(waves::peaked_derivative_value(1, 1.2) == doctest::Approx(0.4));
    CHECK(waves::peaked_derivative_value(2, -0.3) == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK_THROWS(waves::peaked_value(3, 0.0));
}

TEST_CASE("peak value equals the speed") {
    // the crest touches the singular level U = c^{1/p}
    CHECK(waves::peaked_value(1, pi) == doctest::Approx(critical_speed(1)));
    CHECK(waves::peaked_value(2, pi) * waves::peaked_value(2, pi) ==
          doctest::Approx(critical_speed(2)));
}

TEST_CASE("peaked profile sampling and mean") {
    for (int p : {1, 2}) {
        auto w = waves::peaked_profile(p, 256);
        CHECK(w.c == doctest::Approx(critical_speed(p)));
        CHECK(std::abs(w.mean()) < 1e-12);
        CHECK(w.grid.front() == doctest::Approx(-pi));
        for (std::size_t j = 0; j < w.grid.size(); ++j)
            CHECK(w.values[j] == doctest::Approx(waves::peaked_value(p, w.grid[j])));
    }
    CHECK_THROWS(waves::peaked_profile(1, 30));  // not a multiple of 4
}

TEST_CASE("analytic Fourier coefficients against the quadrature oracle") {
    for (int p : {1, 2}) {
        auto d = waves::peaked_coefficients(p, 24);
        for (int n = -24; n <= 24; ++n) {
            auto ref = oracles::peaked_coeff_oracle(p, n);
            CHECK(std::abs(d(n) - ref) < 1e-10);
        }
    }
}

TEST_CASE("derivative grid avoids the peaks") {
    auto f = waves::peaked_derivative(2, 128);
    for (double z : f.grid) {
        CHECK(std::abs(z) > 1e-9);
        CHECK(std::abs(std::abs(z) - pi) > 1e-9);
    }
}

TEST_CASE("smooth wave by shooting") {
    auto sol = waves::smooth_wave_solve(1.05, 1, 1e-6, 512);
    CHECK(sol.residual < 1e-6);
    CHECK(std::abs(sol.profile.mean()) < 1e-8);
    CHECK(sol.trough < 0.0);
    CHECK(sol.trough > -0.5 * 1.05);
    // even about z = 0, trough at 0, crest at pi
    auto& v = sol.profile.values;
    CHECK(v[256] == doctest::Approx(sol.trough));
    CHECK(v[0] == doctest::Approx(*std::max_element(v.begin(), v.end())));

    auto sol2 = waves::smooth_wave_solve(1.1, 2, 1e-6, 512);
    CHECK(sol2.residual < 1e-6);
    CHECK(std::abs(sol2.profile.mean()) < 1e-8);

    CHECK_THROWS(waves::smooth_wave_solve(0.9, 1, 1e-6));      // below range
    CHECK_THROWS(waves::smooth_wave_solve(2.0, 1, 1e-6));      // above c* for p=1
}

TEST_CASE("small-amplitude smooth wave approaches sinusoid scaling") {
    // near c = 1 the wave is nearly harmonic; trough shrinks with c - 1
    auto a = waves::smooth_wave_solve(1.02, 1, 1e-6, 256);
    auto b = waves::smooth_wave_solve(1.08, 1, 1e-6, 256);
    CHECK(std::abs(a.trough) < std::abs(b.trough));
}

TEST_CASE("profile_fourier for smooth waves matches direct quadrature") {
    auto sol = waves::smooth_wave_solve(1.05, 1, 1e-6, 1024);
    auto d = waves::profile_fourier(sol.profile, 16);
    // oracle: interpolate the profile spectrally and integrate
    auto cu = fourier::coeffs_from_samples(std::span<const double>(sol.profile.values), 400);
    for (int n : {0, 1, 2, 5, 16}) {
        auto ref = oracles::integrate(
                       [&](double z) {
                           double u = fourier::evaluate(cu, z).real();
                           return (sol.profile.c - u) * std::exp(complexd(0.0, -n * z));
                       },
                       -pi, pi) /
                   (2.0 * pi);
        CHECK(std::abs(d(n) - ref) < 1e-9);
    }
}

TEST_CASE("breaking indicator") {
    const int n = 256;
    std::vector<double> small(n), big(n), huge(n);
    for (int j = 0; j < n; ++j) {
        double z = -pi + 2.0 * pi * j / n;
        small[static_cast<std::size_t>(j)] = 0.05 * std::sin(z);
        big[static_cast<std::size_t>(j)] = 0.5 * std::sin(z);
        huge[static_cast<std::size_t>(j)] = 0.8 * std::sin(z);
    }
    CHECK(waves::breaking_indicator(small, 1).sign_definite);       // 1 + 0.15 sin z > 0
    CHECK_FALSE(waves::breaking_indicator(big, 1).sign_definite);   // 1 + 1.5 sin z dips below 0
    CHECK(waves::breaking_indicator(small, 2).sign_definite);
    CHECK(waves::breaking_indicator(big, 2).sign_definite);         // sqrt(2)*0.5 < 1 still
    CHECK_FALSE(waves::breaking_indicator(huge, 2).sign_definite);  // sqrt(2)*0.8 > 1
}

#include <doctest.h>

#include <cmath>

#include "ostrovsky/fourier.hpp"

using namespace ostrovsky;

TEST_CASE("dft/idft round trip") {
    std::vector<complexd> x(64);
    for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = complexd(std::sin(0.3 * j), std::cos(0.7 * j));
    auto y = fourier::idft(fourier::dft(x));
    for (std::size_t j = 0; j < x.size(); ++j) CHECK(std::abs(y[j] - x[j]) < 1e-13);
}

TEST_CASE("coefficients of elementary waves") {
    const int n = 128;
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) {
        double z = -pi + 2.0 * pi * j / n;
        u[static_cast<std::size_t>(j)] = 1.5 + std::sin(2.0 * z) - 0.25 * std::cos(5.0 * z);
    }
    auto c = fourier::coeffs_from_samples(std::span<const double>(u), 8);
    CHECK(std::abs(c(0) - 1.5) < 1e-13);
    CHECK(std::abs(c(2) - complexd(0.0, -0.5)) < 1e-13);   // sin(2z) = (e^{2iz}-e^{-2iz})/2i
    CHECK(std::abs(c(-2) - complexd(0.0, 0.5)) < 1e-13);
    CHECK(std::abs(c(5) + 0.125) < 1e-13);                 // -cos(5z)/4
    CHECK(std::abs(c(1)) < 1e-13);
}

TEST_CASE("evaluate matches synthesis") {
    FourierCoeffs c(4);
    c.at(0) = 0.3;
    c.at(1) = complexd(0.2, -0.1);
    c.at(-1) = std::conj(c.at(1));
    c.at(3) = complexd(-0.05, 0.4);
    c.at(-3) = std::conj(c.at(3));
    auto samples = fourier::synthesize_real(c, 32);
    for (int j = 0; j < 32; ++j) {
        double z = -pi + 2.0 * pi * j / 32;
        CHECK(std::abs(fourier::evaluate(c, z).real() - samples[static_cast<std::size_t>(j)]) <
              1e-13);
    }
}

TEST_CASE("spectral derivative and anti-derivative") {
    const int n = 64;
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) {
        double z = -pi + 2.0 * pi * j / n;
        u[static_cast<std::size_t>(j)] = std::sin(3.0 * z);
    }
    auto du = fourier::derivative(u, 1);
    auto d2u = fourier::derivative(u, 2);
    auto v = fourier::antiderivative(u);
    for (int j = 0; j < n; ++j) {
        double z = -pi + 2.0 * pi * j / n;
        CHECK(du[static_cast<std::size_t>(j)] == doctest::Approx(3.0 * std::cos(3.0 * z)).epsilon(1e-12));
        CHECK(d2u[static_cast<std::size_t>(j)] == doctest::Approx(-9.0 * std::sin(3.0 * z)).epsilon(1e-12));
        CHECK(v[static_cast<std::size_t>(j)] == doctest::Approx(-std::cos(3.0 * z) / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("anti-derivative drops the mean") {
    std::vector<double> u(32, 1.0);  // constant input
    auto v = fourier::antiderivative(u);
    for (double x : v) CHECK(std::abs(x) < 1e-13);
}

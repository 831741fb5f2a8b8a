#include "ostrovsky/fourier.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <unordered_map>

namespace ostrovsky::fourier {

namespace {

// FFTW plans are not thread-safe to create; all transforms go through one
// cached plan table guarded by a mutex. Buffers are owned by the cache.
struct PlanPair {
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex g_mutex;
std::unordered_map<int, PlanPair>& plan_table() {
    static std::unordered_map<int, PlanPair> table;
    return table;
}

PlanPair& plans_for(int n) {
    auto& table = plan_table();
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    PlanPair p;
    p.buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    p.fwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    return table.emplace(n, p).first->second;
}

std::vector<complexd> run(std::span<const complexd> x, bool forward) {
    const int n = static_cast<int>(x.size());
    if (n == 0) return {};
    std::lock_guard<std::mutex> lock(g_mutex);
    PlanPair& p = plans_for(n);
    std::memcpy(p.buf, x.data(), sizeof(complexd) * x.size());
    fftw_execute(forward ? p.fwd : p.bwd);
    std::vector<complexd> out(x.size());
    std::memcpy(out.data(), p.buf, sizeof(complexd) * x.size());
    if (!forward)
        for (auto& v : out) v /= static_cast<double>(n);
    return out;
}

}  // namespace

std::vector<complexd> dft(std::span<const complexd> x) { return run(x, true); }
std::vector<complexd> idft(std::span<const complexd> X) { return run(X, false); }

FourierCoeffs coeffs_from_samples(std::span<const complexd> u, int N) {
    const int n = static_cast<int>(u.size());
    if (2 * N >= n) throw std::invalid_argument("mode cutoff too large for sample count");
    auto X = dft(u);
    FourierCoeffs c(N);
    // Samples live at z_j = -pi + 2 pi j / n, so coefficient k picks up (-1)^k.
    for (int k = -N; k <= N; ++k) {
        int idx = k >= 0 ? k : k + n;
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        c.at(k) = sign * X[static_cast<std::size_t>(idx)] / static_cast<double>(n);
    }
    return c;
}

FourierCoeffs coeffs_from_samples(std::span<const double> u, int N) {
    std::vector<complexd> cu(u.begin(), u.end());
    return coeffs_from_samples(std::span<const complexd>(cu), N);
}

complexd evaluate(const FourierCoeffs& c, double z) {
    // Horner in e^{iz} over positive and negative halves.
    const complexd e = std::exp(complexd(0.0, z));
    const complexd einv = std::exp(complexd(0.0, -z));
    complexd pos{0.0, 0.0}, neg{0.0, 0.0};
    for (int n = c.N; n >= 1; --n) {
        pos = (pos + c(n)) * e;
        neg = (neg + c(-n)) * einv;
    }
    return pos + neg + c(0);
}

std::vector<double> synthesize_real(const FourierCoeffs& c, int n) {
    if (2 * c.N >= n) throw std::invalid_argument("grid too coarse for coefficients");
    std::vector<complexd> X(static_cast<std::size_t>(n), complexd{0.0, 0.0});
    for (int k = -c.N; k <= c.N; ++k) {
        int idx = k >= 0 ? k : k + n;
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        X[static_cast<std::size_t>(idx)] = sign * c(k) * static_cast<double>(n);
    }
    auto x = idft(X);
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j].real();
    return out;
}

std::vector<double> derivative(std::span<const double> u, int order) {
    const int n = static_cast<int>(u.size());
    const int N = (n - 1) / 2;
    auto c = coeffs_from_samples(u, N);
    for (int k = -N; k <= N; ++k) {
        complexd ik(0.0, static_cast<double>(k));
        complexd f = 1.0;
        for (int o = 0; o < order; ++o) f *= ik;
        c.at(k) *= f;
    }
    return synthesize_real(c, n);
}

std::vector<double> antiderivative(std::span<const double> u) {
    const int n = static_cast<int>(u.size());
    const int N = (n - 1) / 2;
    auto c = coeffs_from_samples(u, N);
    c.at(0) = 0.0;
    for (int k = -N; k <= N; ++k) {
        if (k == 0) continue;
        c.at(k) /= complexd(0.0, static_cast<double>(k));
    }
    return synthesize_real(c, n);
}

}  // namespace ostrovsky::fourier

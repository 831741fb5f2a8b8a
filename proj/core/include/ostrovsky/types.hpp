#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace ostrovsky {

using complexd = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Critical wave speed: pi^2/9 for the quadratic equation, pi^2/8 for the cubic one.
inline double critical_speed(int p) {
    if (p == 1) return pi * pi / 9.0;
    if (p == 2) return pi * pi / 8.0;
    throw std::invalid_argument("nonlinearity power must be 1 or 2");
}

/// Half-width of the spectral strip: pi/6 (p=1) or pi/4 (p=2).
inline double strip_half_width(int p) {
    if (p == 1) return pi / 6.0;
    if (p == 2) return pi / 4.0;
    throw std::invalid_argument("nonlinearity power must be 1 or 2");
}

enum class WaveKind { smooth, peaked };

/// Real field sampled on a uniform periodic grid over [-pi, pi).
struct SampledField {
    std::vector<double> grid;
    std::vector<double> values;
};

/// A 2pi-periodic traveling-wave profile.
struct WaveProfile {
    int p = 1;          // nonlinearity power
    double c = 0.0;     // wave speed
    std::vector<double> grid;    // z_j = -pi + j*(2pi/n)
    std::vector<double> values;  // U(z_j)
    WaveKind kind = WaveKind::peaked;

    /// Quadrature mean over one period (composite Simpson with periodic closure).
    double mean() const;
};

/// Wave-breaking indicator field m0.
struct BreakingField {
    std::vector<double> grid;
    std::vector<double> values;
    bool sign_definite = false;
};

/// Fourier coefficients c_n of a (not necessarily mean-free) function,
/// indexed n = -N..N in the convention f(z) = sum_n c_n e^{inz}.
struct FourierCoeffs {
    int N = 0;
    std::vector<complexd> c;  // size 2N+1, entry k holds n = k - N

    FourierCoeffs() = default;
    explicit FourierCoeffs(int N_) : N(N_), c(2 * N_ + 1, complexd{0.0, 0.0}) {}

    complexd operator()(int n) const {
        if (n < -N || n > N) throw std::out_of_range("Fourier mode out of range");
        return c[static_cast<std::size_t>(n + N)];
    }
    complexd& at(int n) {
        if (n < -N || n > N) throw std::out_of_range("Fourier mode out of range");
        return c[static_cast<std::size_t>(n + N)];
    }
};

/// The retained Fourier mode set: n = -N..N, with mode 0 excluded at Floquet
/// exponent kappa = 0 (zero-mean space) and included otherwise.
class ModeSet {
public:
    ModeSet(int N, double kappa) : N_(N), zero_(kappa != 0.0) {
        if (N < 1) throw std::invalid_argument("mode cutoff must be >= 1");
    }

    int cutoff() const { return N_; }
    bool has_zero_mode() const { return zero_; }
    int dim() const { return zero_ ? 2 * N_ + 1 : 2 * N_; }

    int mode(int i) const {
        int n = i - N_;
        if (!zero_ && n >= 0) ++n;
        return n;
    }
    int index(int n) const {
        if (n < -N_ || n > N_ || (!zero_ && n == 0))
            throw std::out_of_range("mode not in retained set");
        int i = n + N_;
        if (!zero_ && n > 0) --i;
        return i;
    }

private:
    int N_;
    bool zero_;
};

enum class OpTag { K, A0, A, multiplier };

/// Dense complex matrix over the retained mode set.
struct OperatorMatrix {
    int N = 0;
    double kappa = 0.0;
    OpTag tag = OpTag::A;
    Eigen::MatrixXcd entries;

    ModeSet modes() const { return ModeSet(N, kappa); }
    int dim() const { return static_cast<int>(entries.rows()); }
};

/// Truncated Fourier representation of a state vector, the discrete stand-in
/// for an element of the zero-mean periodic L^2 space.
struct FourierVector {
    int N = 0;
    double kappa = 0.0;
    Eigen::VectorXcd coeffs;  // ordered by ModeSet(N, kappa)

    ModeSet modes() const { return ModeSet(N, kappa); }
};

}  // namespace ostrovsky

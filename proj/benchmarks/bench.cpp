#include <benchmark/benchmark.h>

#include "ostrovsky/evolution.hpp"
#include "ostrovsky/spectra.hpp"
#include "ostrovsky/spectral_ops.hpp"
#include "ostrovsky/waves.hpp"

using namespace ostrovsky;

static void BM_assemble(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    auto d = waves::peaked_coefficients(1, 2 * N);
    for (auto _ : state) {
        auto M = spectral_ops::assemble_operator(d, N, 0.0, true);
        benchmark::DoNotOptimize(M.entries.data());
    }
}
BENCHMARK(BM_assemble)->Arg(64)->Arg(128)->Arg(256);

static void BM_smallest_singular(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    auto M = spectral_ops::assemble_operator(waves::peaked_coefficients(1, 2 * N), N, 0.0, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectra::smallest_singular(M, {0.4, 0.5}));
}
BENCHMARK(BM_smallest_singular)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_eigenvalues(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    auto M = spectral_ops::assemble_operator(waves::peaked_coefficients(1, 2 * N), N, 0.0, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectra::eigenvalues(M).eigenvalues.size());
}
BENCHMARK(BM_eigenvalues)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_nonlinear_steps(benchmark::State& state) {
    auto u0 = evolution::make_initial_data(evolution::InitialKind::peaked_perturbed,
                                           {.p = 1, .n = 256, .amplitude = 0.01}, 7);
    for (auto _ : state) {
        auto tr = evolution::evolve_nonlinear(u0, 1, 2e-3, 0.1);
        benchmark::DoNotOptimize(tr.norms.back());
    }
}
BENCHMARK(BM_nonlinear_steps)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

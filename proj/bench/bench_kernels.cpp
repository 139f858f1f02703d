// Serial reference kernels against their OpenMP counterparts.
//   ./bench_kernels --benchmark_filter=Sweep

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "lefschetz/kernels.hpp"
#include "support.hpp"

using namespace lefschetz;
using namespace lefschetz::kernels;

namespace {

PolyMatrix poly_matrix(std::size_t n) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"x", "z"};
  PolyMatrix m{n, {}};
  for (std::size_t i = 0; i < n * n; ++i)
    m.entries.push_back(oracle::random_polynomial(rng, vars, 3, 4) + Polynomial::constant(vars, 5));
  return m;
}

template <void (*Step)(PolyMatrix&, std::size_t, const Polynomial&)>
void BM_BareissStep(benchmark::State& state) {
  const PolyMatrix m = poly_matrix(static_cast<std::size_t>(state.range(0)));
  const Polynomial one = Polynomial::constant(m.entries.front().variables(), 1);
  for (auto _ : state) {
    PolyMatrix work = m;
    Step(work, 0, one);
    benchmark::DoNotOptimize(work.entries.back());
  }
}

// z^n - 1 with the usual Durand-Kerner starting points.
struct SweepInput {
  std::vector<Complex> monic, current, next;
  explicit SweepInput(std::size_t n) : monic(n, 0.0), current(n), next(n) {
    monic[0] = -1.0;
    for (std::size_t k = 0; k < n; ++k) current[k] = std::pow(Complex(0.4, 0.9), static_cast<double>(k));
  }
};

template <void (*Sweep)(std::span<const Complex>, std::span<const Complex>, std::span<Complex>)>
void BM_WeierstrassSweep(benchmark::State& state) {
  SweepInput in(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Sweep(in.monic, in.current, in.next);
    benchmark::DoNotOptimize(in.next.data());
  }
}

template <void (*Residuals)(std::span<const Complex>, std::span<const Complex>, std::span<double>)>
void BM_RelativeResiduals(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Complex> coeffs(n + 1, 1.0), roots(n);
  for (std::size_t k = 0; k < n; ++k) roots[k] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
  std::vector<double> out(n);
  for (auto _ : state) {
    Residuals(coeffs, roots, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <double (*Annulus)(int, Complex, double, double, int, int)>
void BM_Annulus(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Annulus(6, {1e-4, 2e-5}, 0.1, 0.5, grid, 4 * grid));
}

template <std::vector<std::vector<GroupSummary>> (*Batch)(std::span<const ChainComplex>)>
void BM_HomologyBatch(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<ChainComplex> batch;
  for (int i = 0; i < state.range(0); ++i) batch.push_back(oracle::random_valid_complex(rng, 5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(Batch(batch));
}

}  // namespace

BENCHMARK(BM_BareissStep<serial::bareiss_step>)->Arg(8)->Arg(16);
BENCHMARK(BM_BareissStep<parallel::bareiss_step>)->Arg(8)->Arg(16);
BENCHMARK(BM_WeierstrassSweep<serial::weierstrass_sweep>)->Arg(64)->Arg(512);
BENCHMARK(BM_WeierstrassSweep<parallel::weierstrass_sweep>)->Arg(64)->Arg(512);
BENCHMARK(BM_RelativeResiduals<serial::relative_residuals>)->Arg(64)->Arg(512);
BENCHMARK(BM_RelativeResiduals<parallel::relative_residuals>)->Arg(64)->Arg(512);
BENCHMARK(BM_Annulus<serial::annulus_min_derivative>)->Arg(64)->Arg(256);
BENCHMARK(BM_Annulus<parallel::annulus_min_derivative>)->Arg(64)->Arg(256);
BENCHMARK(BM_HomologyBatch<serial::homology_batch>)->Arg(64);
BENCHMARK(BM_HomologyBatch<parallel::homology_batch>)->Arg(64);

BENCHMARK_MAIN();

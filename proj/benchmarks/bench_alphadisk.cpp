#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "alphadisk/core.hpp"
#include "alphadisk/estimates.hpp"
#include "alphadisk/kernels.hpp"
#include "alphadisk/quadrature.hpp"
#include "alphadisk/solver.hpp"
#include "alphadisk/transforms.hpp"

using namespace alphadisk;

namespace {

const AlphaWeight kAlpha(1.0);

// range(0) is the argument in permille so both evaluation branches get hit
void BM_HProfile(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(h_alpha(r, kAlpha));
}
BENCHMARK(BM_HProfile)->Arg(300)->Arg(900);

void BM_PoissonKernel(benchmark::State& state) {
  const DiskPoint z(0.7, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_kernel_alpha(z, kAlpha));
}
BENCHMARK(BM_PoissonKernel);

void BM_GreenKernel(benchmark::State& state) {
  const DiskPoint z(0.3, 0.4), w(-0.5, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(green_alpha(z, w, kAlpha));
}
BENCHMARK(BM_GreenKernel);

void BM_DiskIntegral(benchmark::State& state) {
  QuadratureSpec spec;
  const auto f = [](const DiskPoint& z) { return cplx(std::exp(-z.abs2()), 0.0); };
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::integrate_disk(f, spec));
}
BENCHMARK(BM_DiskIntegral)->Unit(benchmark::kMicrosecond);

// recentred rule with the log singularity at the centre, rim distance in permille
void BM_I2(benchmark::State& state) {
  QuadratureSpec spec;
  const DiskPoint w(1.0 - static_cast<double>(state.range(0)) / 1000.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(compute_I2(w, kAlpha, spec));
}
BENCHMARK(BM_I2)->Arg(500)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_M1(benchmark::State& state) {
  QuadratureSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(compute_M1(0.9, spec));
}
BENCHMARK(BM_M1)->Unit(benchmark::kMillisecond);

void BM_GreenPotential(benchmark::State& state) {
  QuadratureSpec spec;
  const auto g = DiskField::from_rule([](const DiskPoint& z) {
    return cplx(1.0 - z.abs2(), 0.0);
  });
  const DiskPoint w(static_cast<double>(state.range(0)) / 1000.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(green_potential_of(g, kAlpha, w, spec));
}
BENCHMARK(BM_GreenPotential)->Arg(500)->Arg(970)->Unit(benchmark::kMillisecond);

BoundarySignal abs_sin_signal(std::size_t n) {
  return BoundarySignal::from_rule(
      [](double t) { return cplx(std::abs(std::sin(t)), 0.0); }, n);
}

void BM_SpectrumAnalyze(benchmark::State& state) {
  const BoundarySignal psi = abs_sin_signal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(FourierSpectrum::analyze(psi));
}
BENCHMARK(BM_SpectrumAnalyze)->Arg(256)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_HilbertMultiplier(benchmark::State& state) {
  const BoundarySignal psi = abs_sin_signal(1024);
  for (auto _ : state)
    benchmark::DoNotOptimize(hilbert_transform(psi, HilbertMethod::multiplier));
}
BENCHMARK(BM_HilbertMultiplier)->Unit(benchmark::kMicrosecond);

void BM_HilbertPV(benchmark::State& state) {
  const BoundarySignal psi = abs_sin_signal(512);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_transform(psi, HilbertMethod::pv));
}
BENCHMARK(BM_HilbertPV)->Unit(benchmark::kMicrosecond);

void BM_AlphaPoissonExtend(benchmark::State& state) {
  const BoundarySignal psi = abs_sin_signal(256);
  const DiskPoint z(0.5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_poisson_extend(psi, z, kAlpha));
}
BENCHMARK(BM_AlphaPoissonExtend)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

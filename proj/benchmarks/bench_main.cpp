#include <benchmark/benchmark.h>

#include "horizonlab/geometry.hpp"
#include "horizonlab/inequalities.hpp"
#include "horizonlab/models.hpp"
#include "horizonlab/profile.hpp"
#include "horizonlab/spectral.hpp"
#include "horizonlab/width.hpp"

using namespace horizonlab;

namespace {

const ModelParams kGeneric{.m = 0.10, .Q = 0.08, .lambda = 3.0};

const WarpedProfile& generic_profile() {
  static const WarpedProfile prof =
      periodic_profile(integrate_half_profile(kGeneric));
  return prof;
}

void BM_HorizonRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(horizon_roots(kGeneric));
}
BENCHMARK(BM_HorizonRoots);

void BM_ClassifyRegime(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_regime(kGeneric));
}
BENCHMARK(BM_ClassifyRegime);

void BM_BuildProfile(benchmark::State& state) {
  const double tol = std::pow(10.0, -state.range(0));
  const int samples = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(periodic_profile(integrate_half_profile(kGeneric, tol, samples)));
}
BENCHMARK(BM_BuildProfile)->Args({10, 4096})->Args({12, 4096})->Args({10, 1024});

void BM_SystemResiduals(benchmark::State& state) {
  const WarpedProfile& prof = generic_profile();
  for (auto _ : state) benchmark::DoNotOptimize(system_residuals(prof));
}
BENCHMARK(BM_SystemResiduals);

void BM_JacobiSpectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_spectrum(kGeneric, 0.88));
}
BENCHMARK(BM_JacobiSpectrum);

void BM_SmoothGluing(benchmark::State& state) {
  const WarpedProfile& prof = generic_profile();
  for (auto _ : state) benchmark::DoNotOptimize(check_smooth_gluing(prof, 5));
}
BENCHMARK(BM_SmoothGluing);

void BM_Pohozaev(benchmark::State& state) {
  const WarpedProfile& prof = generic_profile();
  for (auto _ : state)
    benchmark::DoNotOptimize(pohozaev_identity(prof, 0.0, prof.half_period()));
}
BENCHMARK(BM_Pohozaev);

void BM_SweepoutValue(benchmark::State& state) {
  const WarpedProfile& prof = generic_profile();
  for (auto _ : state) benchmark::DoNotOptimize(sweepout_value(prof));
}
BENCHMARK(BM_SweepoutValue);

void BM_PerturbationProbe(benchmark::State& state) {
  const WarpedProfile& prof = generic_profile();
  const std::vector<PerturbationFamily> families = {{1e-2, 0}, {1e-2, 2}};
  for (auto _ : state)
    benchmark::DoNotOptimize(perturbation_probe(prof, families, 128, 48));
}
BENCHMARK(BM_PerturbationProbe);

}  // namespace

BENCHMARK_MAIN();

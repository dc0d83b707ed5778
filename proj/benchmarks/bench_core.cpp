#include <benchmark/benchmark.h>

#include <random>

#include "vpair/asymptotics.hpp"
#include "vpair/dynamics.hpp"
#include "vpair/measures.hpp"
#include "vpair/states.hpp"

using namespace vpair;

namespace {

DensityMatrix make_random_state(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix g(kDim, kDim);
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) g(r, c) = Complex(dist(rng), dist(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return require_density(rho);
}

void BM_LindbladRhs(benchmark::State& state) {
  const auto rho = make_random_state(1);
  const auto params = SystemParams::small_separation(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(lindblad_rhs(rho, params));
}
BENCHMARK(BM_LindbladRhs);

void BM_BuildLiouvillian(benchmark::State& state) {
  const auto params = SystemParams::small_separation(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_liouvillian(params));
}
BENCHMARK(BM_BuildLiouvillian);

void BM_EvolveUnitTime(benchmark::State& state) {
  const auto rho = make_random_state(2);
  const auto params = SystemParams::small_separation(0.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(evolve(rho, 1.0, 1e-3, params));
}
BENCHMARK(BM_EvolveUnitTime);

void BM_HermitianEig9(benchmark::State& state) {
  const auto rho = make_random_state(3);
  const HermitianMatrix h(rho.matrix());
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEig9);

void BM_LiouvillianSpectrum(benchmark::State& state) {
  const auto liouv = build_liouvillian(SystemParams::small_separation(0.0));
  for (auto _ : state)
    benchmark::DoNotOptimize(general_eigenvalues(liouv.matrix()));
}
BENCHMARK(BM_LiouvillianSpectrum);

void BM_Negativity(benchmark::State& state) {
  const auto rho = make_random_state(4);
  for (auto _ : state) benchmark::DoNotOptimize(negativity(rho));
}
BENCHMARK(BM_Negativity);

void BM_AsymptoticState(benchmark::State& state) {
  const auto rho = make_random_state(5);
  for (auto _ : state) benchmark::DoNotOptimize(asymptotic_state(rho));
}
BENCHMARK(BM_AsymptoticState);

void BM_ExponentialAction(benchmark::State& state) {
  const auto liouv = build_liouvillian(SystemParams::small_separation(0.0));
  const auto vec = vectorize(make_random_state(6).matrix());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        matrix_exponential_action(liouv.matrix(), vec, 10.0));
}
BENCHMARK(BM_ExponentialAction);

void BM_RegionClassify(benchmark::State& state) {
  const RegionBoundary boundary(10000);
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary.classify(0.5, 0.025));
}
BENCHMARK(BM_RegionClassify);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cohmix/linalg.hpp"
#include "cohmix/measures.hpp"
#include "cohmix/optimizer.hpp"
#include "cohmix/sampler.hpp"

namespace {

using namespace cohmix;

void BM_HermitianEig(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SeededRng rng(1);
  const ComplexMatrix m = ginibre_state(d, d, rng).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_GinibreState(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SeededRng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(ginibre_state(d, d, rng));
}
BENCHMARK(BM_GinibreState)->Arg(2)->Arg(4)->Arg(8);

void BM_Scan(benchmark::State& state) {
  ScanOptions opts;
  opts.dim = static_cast<int>(state.range(0));
  opts.samples = 100000;
  opts.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(scan(opts));
  state.SetItemsProcessed(state.iterations() * opts.samples);
}
BENCHMARK(BM_Scan)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Fidelity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SeededRng rng(4);
  const ComplexMatrix rho = ginibre_state(d, d, rng).matrix();
  const ComplexMatrix sigma = ginibre_state(d, d, rng).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(rho, sigma));
}
BENCHMARK(BM_Fidelity)->Arg(2)->Arg(4)->Arg(8);

void BM_GeometricCoherenceNumeric(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SeededRng rng(5);
  const DensityMatrix rho = ginibre_state(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_coherence_numeric(rho));
}
BENCHMARK(BM_GeometricCoherenceNumeric)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_MaxCoherenceAtMixedness(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  OptimizerConfig cfg;
  cfg.restarts = 4;
  for (auto _ : state) benchmark::DoNotOptimize(max_coherence_at_mixedness(d, 0.5, cfg));
}
BENCHMARK(BM_MaxCoherenceAtMixedness)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

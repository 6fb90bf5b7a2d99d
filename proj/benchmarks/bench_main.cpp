#include <benchmark/benchmark.h>

#include "vdwx/dataset.hpp"
#include "vdwx/media.hpp"
#include "vdwx/pair.hpp"
#include "vdwx/propagator.hpp"
#include "vdwx/quadrature.hpp"

namespace {

using namespace vdwx;

PairConfiguration canonical_pair() {
  return {TwoLevelAtom(1.0, 0.0, 1.0), AtomState::excited,
          TwoLevelAtom(0.9, 0.02, 1.0), AtomState::ground};
}

void BM_PairClosed(benchmark::State& state) {
  const PairConfiguration pc = canonical_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_closed_nearzone(pc, 1.0));
  }
}
BENCHMARK(BM_PairClosed);

void BM_PairQuadrature(benchmark::State& state) {
  const PairConfiguration pc = canonical_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_quadrature_nearzone(pc, 1.0));
  }
}
BENCHMARK(BM_PairQuadrature);

void BM_ContractedKernel(benchmark::State& state) {
  double omega = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contracted_pair_kernel(omega, 2.0));
    omega += 1e-9;  // defeat value caching across iterations
  }
}
BENCHMARK(BM_ContractedKernel);

void BM_LifshitzQuadrature(benchmark::State& state) {
  const MediumState a(TwoLevelAtom(1.0, 0.0, 1.0), 1.0, 0.0);
  const MediumState b(TwoLevelAtom(0.9, 0.02, 1.0), 1.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(media_force_lifshitz_quadrature(a, b, 1.0));
  }
}
BENCHMARK(BM_LifshitzQuadrature);

void BM_FigureSmall(benchmark::State& state) {
  FigureOverrides ov;
  ov.points = 51;
  for (auto _ : state) {
    benchmark::DoNotOptimize(figure_dataset("7", ov));
  }
}
BENCHMARK(BM_FigureSmall);

}  // namespace

BENCHMARK_MAIN();

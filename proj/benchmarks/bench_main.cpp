#include "simplexvol/counterexample.hpp"
#include "simplexvol/inverse.hpp"
#include "simplexvol/jacobian.hpp"
#include "simplexvol/kneser.hpp"
#include "simplexvol/simplex.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace simplexvol;

void BM_KneserDeterminant(benchmark::State& state) {
  const KneserAdjacency adj = build_kneser_adjacency(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_determinant(adj));
  }
}
BENCHMARK(BM_KneserDeterminant)->DenseRange(4, 12, 4);

void BM_Annihilation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const KneserAdjacency adj = build_kneser_adjacency(n, k);
  const SpectrumSpec spectrum = predicted_spectrum(n, k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_annihilation(adj, spectrum));
  }
}
BENCHMARK(BM_Annihilation)->Args({8, 2})->Args({8, 4})->Args({9, 4});

void BM_AnalyticJacobian(benchmark::State& state) {
  const SimplexSpec spec = regular_simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_jacobian(spec));
  }
}
BENCHMARK(BM_AnalyticJacobian)->DenseRange(4, 10, 3);

void BM_JacobianRank(benchmark::State& state) {
  const SimplexSpec spec = regular_simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobian_rank(spec));
  }
}
BENCHMARK(BM_JacobianRank)->DenseRange(4, 10, 3);

void BM_FaceVolumes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SimplexSpec spec = build_instance(n, 1.0).spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_face_volumes(spec, n - 2));
  }
}
BENCHMARK(BM_FaceVolumes)->DenseRange(4, 8, 2);

void BM_BasinProbe(benchmark::State& state) {
  const std::vector<double> target = forward_map(build_pair(4, 0.5).minus.spec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(basin_probe(4, target, static_cast<int>(state.range(0)), 2024));
  }
}
BENCHMARK(BM_BasinProbe)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

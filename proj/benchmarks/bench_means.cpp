// Cost of the weighted means and their maximal closures on the Walsh group,
// per weight family, streaming partial sums underneath.

#include <benchmark/benchmark.h>

#include "vlab/maximal.hpp"
#include "vlab/means.hpp"
#include "vlab/rng.hpp"
#include "vlab/transform.hpp"
#include "vlab/weights.hpp"

namespace {

vlab::Basis walsh(int depth) { return vlab::build_basis({2}, depth); }

void BM_SingleMean(benchmark::State& state) {
  const vlab::Basis b = walsh(static_cast<int>(state.range(0)));
  const vlab::GridFunction f = vlab::random_complex_grid(b, 3);
  const vlab::WeightSequence w(vlab::parse_weight_spec("power(0.5)"));
  const long long n = b.size() / 2 + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vlab::t_mean(f, w, n));
  }
}
BENCHMARK(BM_SingleMean)->DenseRange(6, 10);

void BM_WeightPrefix(benchmark::State& state) {
  const vlab::WeightSequence w(vlab::parse_weight_spec("iterlog(1,1)"));
  const long long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.prefix_sum(n));
  }
}
BENCHMARK(BM_WeightPrefix)->Arg(1000)->Arg(50000)->Arg(10000000);

void BM_MaximalSingleKind(benchmark::State& state) {
  const vlab::Basis b = walsh(static_cast<int>(state.range(0)));
  const vlab::GridFunction f = vlab::random_complex_grid(b, 5);
  const vlab::WeightSequence w(vlab::parse_weight_spec("riesz"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vlab::maximal_t(f, w));
  }
}
BENCHMARK(BM_MaximalSingleKind)->DenseRange(5, 8);

void BM_DominationBatch(benchmark::State& state) {
  const vlab::Basis b = walsh(static_cast<int>(state.range(0)));
  const vlab::SpectralFunction c =
      vlab::vft_forward(vlab::random_complex_grid(b, 5));
  std::vector<vlab::WeightSequence> kinds;
  for (const char* k : {"riesz", "power(0.5)", "inverse_cesaro(0.5)", "iterlog(1,1)"}) {
    kinds.emplace_back(vlab::parse_weight_spec(k));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(vlab::domination_batch(c, kinds));
  }
}
BENCHMARK(BM_DominationBatch)->DenseRange(5, 8);

}  // namespace

BENCHMARK_MAIN();

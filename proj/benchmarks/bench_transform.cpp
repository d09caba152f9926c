// Transform throughput at growing group sizes, fast stage pipeline against
// the quadratic reference, plus the streaming character sweep.

#include <benchmark/benchmark.h>

#include "vlab/rng.hpp"
#include "vlab/transform.hpp"

namespace {

vlab::Basis mixed_basis(int depth) { return vlab::build_basis({2, 3, 2, 4}, depth); }

void BM_ForwardFast(benchmark::State& state) {
  const vlab::Basis b = mixed_basis(static_cast<int>(state.range(0)));
  const vlab::GridFunction f = vlab::random_complex_grid(b, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vlab::vft_forward(f));
  }
  state.SetComplexityN(b.size());
}
BENCHMARK(BM_ForwardFast)->DenseRange(4, 10)->Complexity(benchmark::oNLogN);

void BM_ForwardNaive(benchmark::State& state) {
  const vlab::Basis b = mixed_basis(static_cast<int>(state.range(0)));
  const vlab::GridFunction f = vlab::random_complex_grid(b, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vlab::vft_forward_naive(f));
  }
  state.SetComplexityN(b.size());
}
BENCHMARK(BM_ForwardNaive)->DenseRange(4, 7)->Complexity(benchmark::oNSquared);

void BM_RoundTrip(benchmark::State& state) {
  const vlab::Basis b = mixed_basis(static_cast<int>(state.range(0)));
  const vlab::GridFunction f = vlab::random_complex_grid(b, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vlab::vft_inverse(vlab::vft_forward(f)));
  }
}
BENCHMARK(BM_RoundTrip)->DenseRange(6, 10);

void BM_CharacterSweep(benchmark::State& state) {
  const vlab::Basis b = mixed_basis(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    vlab::CharacterSweep sweep(b);
    double acc = sweep.row()[0].real();
    for (long long n = 1; n < b.size(); ++n) {
      sweep.advance();
      acc += sweep.row()[0].real();
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CharacterSweep)->DenseRange(4, 7);

}  // namespace

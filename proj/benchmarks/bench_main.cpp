#include <benchmark/benchmark.h>

#include "qfent/correlations.hpp"
#include "qfent/entropy.hpp"
#include "qfent/finite_chain.hpp"
#include "qfent/model.hpp"
#include "qfent/quadrature.hpp"

using namespace qfent;

namespace {

ModelSpec breaking_model() {
  ModelSpec m;
  m.hop = {cxd(12, 0), cxd(7, 28), cxd(4, 5)};
  m.pair = {cxd(0, 0), cxd(-11, 10), cxd(-3, 4)};
  m.validate();
  return m;
}

void bm_quadrature_block(benchmark::State& state) {
  const ModelSpec m = nn_model(1.0, 1.0, 2.0);
  const long d = state.range(0);
  for (auto _ : state) {
    const CorrelationEngine eng(m, 1e-12);  // fresh engine: no cache hits
    benchmark::DoNotOptimize(eng.pi_block(d));
  }
}
BENCHMARK(bm_quadrature_block)->Arg(1)->Arg(32)->Arg(256);

void bm_block_entropy(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const CorrelationEngine eng(nn_model(1.0, 1.0, 0.0), 1e-12);
  block_entropy(eng, L);  // warm the coefficient cache once
  for (auto _ : state)
    benchmark::DoNotOptimize(block_entropy(eng, L));
  state.SetComplexityN(L);
}
BENCHMARK(bm_block_entropy)->Arg(32)->Arg(128)->Arg(512)->Complexity();

void bm_gauge_entropy(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const ModelSpec m = nn_model(0.0, 0.0, 0.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(gauge_entropy(m, L));
}
BENCHMARK(bm_gauge_entropy)->Arg(64)->Arg(256);

void bm_finite_chain_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModelSpec m = breaking_model();
  for (auto _ : state) {
    const FiniteChain chain(m, n, Boundary::open);
    benchmark::DoNotOptimize(chain.ground_energy());
  }
}
BENCHMARK(bm_finite_chain_build)->Arg(64)->Arg(128)->Arg(256)
    ->Unit(benchmark::kMillisecond);

void bm_finite_profile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteChain chain(breaking_model(), n, Boundary::open);
  for (auto _ : state)
    benchmark::DoNotOptimize(entropy_profile(chain, n / 16));
}
BENCHMARK(bm_finite_profile)->Arg(64)->Arg(128)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "numon/catenary.hpp"
#include "numon/construction.hpp"
#include "numon/factorization.hpp"
#include "numon/monoid.hpp"

using namespace numon;

static void BM_MonoidConstruction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(new_monoid({90, 91, 96, 120, 150}));
  }
}
BENCHMARK(BM_MonoidConstruction);

static void BM_FactorizationEnumerator(benchmark::State& state) {
  const auto s = new_monoid({90, 91, 96, 120, 150});
  const Value window = state.range(0);
  for (auto _ : state) {
    FactorizationEnumerator enumerator(s, window);
    benchmark::DoNotOptimize(enumerator.collect(window));
  }
}
BENCHMARK(BM_FactorizationEnumerator)->Arg(1000)->Arg(10000);

// the streaming path: |Z(100000)| is far too large to materialize, so
// measure the visit throughput over a fixed slice instead
static void BM_FactorizationStream(benchmark::State& state) {
  const auto s = new_monoid({90, 91, 96, 120, 150});
  const FactorizationEnumerator enumerator(s, 100000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerator.count(100000, 100000));
  }
}
BENCHMARK(BM_FactorizationStream);

static void BM_FactorizeElement(benchmark::State& state) {
  const auto s = new_monoid({90, 91, 96, 120, 150});
  const FactorizationEnumerator enumerator(s, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerator.collect(state.range(0)));
  }
}
BENCHMARK(BM_FactorizeElement)->Arg(1835)->Arg(10000);

static void BM_CatenaryElement(benchmark::State& state) {
  const auto s = new_monoid({90, 91, 96, 120, 150});
  for (auto _ : state) {
    benchmark::DoNotOptimize(catenary_element(s, 546));
  }
}
BENCHMARK(BM_CatenaryElement);

static void BM_BettiElements(benchmark::State& state) {
  const auto s = new_monoid({90, 91, 96, 120, 150});
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_elements(s));
  }
}
BENCHMARK(BM_BettiElements);

static void BM_CatenarySetSweep(benchmark::State& state) {
  const auto s = new_monoid({90, 91, 96, 120, 150});
  CatenaryOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(catenary_set(s, {}, options));
  }
}
BENCHMARK(BM_CatenarySetSweep)->Arg(1)->Arg(2)->Arg(4);

static void BM_RealizeExplicit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize({0, 2, 7, 20, 26, 57}, BPolicy::Explicit,
                                     {51, 1301, 57001}));
  }
}
BENCHMARK(BM_RealizeExplicit);

static void BM_VerifyTrace(benchmark::State& state) {
  const auto trace =
      realize({0, 2, 7, 20, 26, 57}, BPolicy::Explicit, {51, 1301, 57001});
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_trace(trace, 3000));
  }
}
BENCHMARK(BM_VerifyTrace);

BENCHMARK_MAIN();

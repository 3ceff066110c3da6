#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "tauber/arith.hpp"
#include "tauber/bernoulli.hpp"
#include "tauber/families.hpp"
#include "tauber/partitions.hpp"
#include "tauber/series.hpp"

static void BM_FactorSieve(benchmark::State& state) {
  const auto limit = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    tauber::FactorSieve sieve(limit);
    benchmark::DoNotOptimize(sieve.primes().size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FactorSieve)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

static void BM_LambdaK(benchmark::State& state) {
  const tauber::FactorSieve sieve(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto table = tauber::lambda_k_table(sieve, 3);
    benchmark::DoNotOptimize(table.reals().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LambdaK)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_PartitionTable(benchmark::State& state) {
  const tauber::PartSet set({1, 2, 3, 5, 7});
  for (auto _ : state) {
    auto table = tauber::p_H_table(set, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(table.counts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PartitionTable)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMicrosecond);

static void BM_EvalSeries(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  const double z = 1.0 - std::ldexp(1.0, -j);
  tauber::FamilyRequest req{"pH", tauber::PartSet({1, 2, 3})};
  req.coverage = tauber::suggested_coverage(tauber::family_certificate(req), z, 1e-12);
  const auto spec = tauber::make_family(req);
  std::size_t terms = 0;
  for (auto _ : state) {
    const auto r = tauber::eval_series(spec, z, 1e-12);
    terms = r.last_index;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_EvalSeries)->DenseRange(8, 14, 3)->Unit(benchmark::kMillisecond);

static void BM_Faulhaber(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tauber::faulhaber_sum(k, 1000));
}
BENCHMARK(BM_Faulhaber)->Arg(5)->Arg(20);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "syzcert/arith.hpp"
#include "syzcert/criteria.hpp"
#include "syzcert/lattice.hpp"

using namespace syz;

static void BM_LucasTable(benchmark::State& state) {
  const auto top = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = 0; i <= top; ++i)
      for (std::uint64_t k = 0; k <= i; ++k) acc += arith::binom_mod_p_lucas(i, k, 7);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (top + 1) * (top + 2) / 2);
}
BENCHMARK(BM_LucasTable)->Arg(100)->Arg(300);

static void BM_ExactBinom(benchmark::State& state) {
  const auto a = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith::binom(a, static_cast<std::int64_t>(a / 2)));
}
BENCHMARK(BM_ExactBinom)->Arg(60)->Arg(600);

static void BM_EnumerateSupports(benchmark::State& state) {
  const auto d = static_cast<std::uint64_t>(state.range(0));
  std::size_t found = 0;
  for (auto _ : state) {
    auto s = lattice::enumerate_supports(3, 2, d);
    found = s.size();
    benchmark::DoNotOptimize(s);
  }
  state.counters["supports"] = static_cast<double>(found);
}
BENCHMARK(BM_EnumerateSupports)->Arg(8)->Arg(16)->Arg(24);

static void BM_CrudeMarginFull(benchmark::State& state) {
  const auto d = static_cast<std::uint64_t>(state.range(0));
  std::vector<std::uint64_t> all(d);
  for (std::uint64_t i = 0; i < d; ++i) all[i] = i;
  const auto s = lattice::make_support(3, 2, d, all);
  for (auto _ : state) benchmark::DoNotOptimize(lattice::crude_margin(s));
}
BENCHMARK(BM_CrudeMarginFull)->Arg(16)->Arg(128);

static void BM_CertifySweep(benchmark::State& state) {
  const auto d_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    for (std::uint64_t d = 1; d <= d_max; ++d) benchmark::DoNotOptimize(criteria::certify_case(4, 3, d));
  state.SetItemsProcessed(state.iterations() * d_max);
}
BENCHMARK(BM_CertifySweep)->Arg(100)->Arg(300);

static void BM_Threshold(benchmark::State& state) {
  const criteria::ThresholdQuery q{3, static_cast<std::uint64_t>(state.range(0)), 1, Rational(0)};
  for (auto _ : state) benchmark::DoNotOptimize(criteria::restriction_threshold(q));
}
BENCHMARK(BM_Threshold)->Arg(2)->Arg(5);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <gammamin/combinatorics.hpp>
#include <gammamin/gamma_minimum.hpp>
#include <gammamin/power_series.hpp>
#include <gammamin/specfun.hpp>

namespace {

using namespace gammamin;

void BM_Digamma(benchmark::State& state) {
  const PrecisionConfig cfg{static_cast<int>(state.range(0)), 10};
  const BigReal z = BigReal::parse("1.4616", cfg.working_digits() + 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(digamma(z, cfg));
  }
}
BENCHMARK(BM_Digamma)->Arg(20)->Arg(50)->Arg(100)->Arg(200);

void BM_HurwitzZeta(benchmark::State& state) {
  const PrecisionConfig cfg{static_cast<int>(state.range(0)), 10};
  const BigReal v = BigReal::from_ratio(3, 2, cfg.working_digits() + 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hurwitz_zeta(2, v, cfg));
  }
}
BENCHMARK(BM_HurwitzZeta)->Arg(20)->Arg(50)->Arg(100);

void BM_PsiRoot(benchmark::State& state) {
  const PrecisionConfig cfg{static_cast<int>(state.range(0)), 10};
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_root(cfg));
  }
}
BENCHMARK(BM_PsiRoot)->Arg(20)->Arg(50);

void BM_ExpandReversion(benchmark::State& state) {
  const PrecisionConfig cfg{50, 10};
  const BigReal a = BigReal::from_ratio(3, 2, 70);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(a, order, Method::kReversion, cfg));
  }
}
BENCHMARK(BM_ExpandReversion)->Arg(4)->Arg(8)->Arg(16);

void BM_ExpandFaaDiBruno(benchmark::State& state) {
  const PrecisionConfig cfg{50, 10};
  const BigReal a = BigReal::from_ratio(3, 2, 70);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(a, order, Method::kFaaDiBruno, cfg));
  }
}
BENCHMARK(BM_ExpandFaaDiBruno)->Arg(4)->Arg(8)->Arg(16);

void BM_BellPartitions(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_bell_partitions(m));
  }
}
BENCHMARK(BM_BellPartitions)->Arg(8)->Arg(12)->Arg(19);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "bfh/grading.hpp"

static void BM_GroupLaw(benchmark::State& state) {
  using namespace bfh;
  GradingElement a = parse_grading("(-1/2;1/2,-1/2)");
  GradingElement b = parse_grading("(-1/2;1/2,1/2)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(a, b));
  }
}
BENCHMARK(BM_GroupLaw);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "segcalc/harness.hpp"

namespace {

using segcalc::Execution;

void run(benchmark::State& state, const char* suite, Execution exec) {
  segcalc::SuiteOptions options;
  options.execution = exec;
  std::int64_t cases = 0;
  for (auto _ : state) {
    const auto report = segcalc::run_suite(suite, options);
    if (!report.passed()) state.SkipWithError("suite failed");
    cases = report.cases;
  }
  state.counters["cases"] = static_cast<double>(cases);
}

void BM_Coassociativity(benchmark::State& s, Execution e) { run(s, "coassociativity", e); }
void BM_ComodSymmetry(benchmark::State& s, Execution e) { run(s, "comod-symmetry", e); }
void BM_DerivativeAlgebra(benchmark::State& s, Execution e) { run(s, "derivative-algebra", e); }
void BM_CriticalClassification(benchmark::State& s, Execution e) { run(s, "critical-classification", e); }

}  // namespace

BENCHMARK_CAPTURE(BM_Coassociativity, serial, Execution::Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Coassociativity, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_ComodSymmetry, serial, Execution::Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_ComodSymmetry, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_DerivativeAlgebra, serial, Execution::Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_DerivativeAlgebra, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_CriticalClassification, serial, Execution::Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_CriticalClassification, parallel, Execution::Parallel)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();

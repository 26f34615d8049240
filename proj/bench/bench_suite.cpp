#include <benchmark/benchmark.h>

#include "purify/propcheck.hpp"

namespace {

purify::GenConfig config() {
  purify::GenConfig cfg;
  cfg.max_depth = 6;
  cfg.seed = 7;
  return cfg;
}

void run(benchmark::State& state, const std::string& suite, bool parallel) {
  int trials = static_cast<int>(state.range(0));
  for (auto _ : state) {
    purify::SuiteReport r = parallel ? purify::run_suite(suite, config(), trials)
                                     : purify::run_suite_serial(suite, config(), trials);
    benchmark::DoNotOptimize(r.passes);
  }
  state.SetItemsProcessed(state.iterations() * trials);
}

void BM_TypesSerial(benchmark::State& s) { run(s, "types", false); }
void BM_TypesParallel(benchmark::State& s) { run(s, "types", true); }
void BM_SemanticsSerial(benchmark::State& s) { run(s, "semantics", false); }
void BM_SemanticsParallel(benchmark::State& s) { run(s, "semantics", true); }

}  // namespace

BENCHMARK(BM_TypesSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TypesParallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemanticsSerial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemanticsParallel)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

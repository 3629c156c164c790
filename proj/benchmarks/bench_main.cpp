#include <benchmark/benchmark.h>

#include "avoidance/combnum.hpp"
#include "avoidance/oracle.hpp"
#include "avoidance/series.hpp"
#include "avoidance/words.hpp"

namespace {

using namespace avoidance;

void BM_CountPruned(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto set = PatternSet::parse(state.range(1) == 0 ? "112" : "123");
  OracleOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(n, 4, set, options));
}
BENCHMARK(BM_CountPruned)->ArgsProduct({{6, 8, 10}, {0, 1}});

void BM_CountNaive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto set = PatternSet::parse("112");
  OracleOptions options;
  options.strategy = SearchStrategy::naive;
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(n, 4, set, options));
}
BENCHMARK(BM_CountNaive)->Arg(6)->Arg(8);

void BM_Contains(benchmark::State& state) {
  std::vector<Letter> letters;
  for (int i = 0; i < state.range(0); ++i) letters.push_back(static_cast<Letter>(1 + (i * 7) % 5));
  const Word word(letters, 5);
  const auto pattern = Pattern::parse("1324");
  for (auto _ : state) benchmark::DoNotOptimize(contains(word, pattern));
}
BENCHMARK(BM_Contains)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Series e = exp_series(order);
  for (auto _ : state) benchmark::DoNotOptimize(e * e);
}
BENCHMARK(BM_SeriesMultiply)->Arg(16)->Arg(64);

void BM_TableBuild(benchmark::State& state) {
  const auto set = PatternSet::parse("112,221");
  for (auto _ : state) benchmark::DoNotOptimize(build_table(set, 7, 4, {}));
}
BENCHMARK(BM_TableBuild);

}  // namespace

BENCHMARK_MAIN();

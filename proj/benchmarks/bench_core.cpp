#include <benchmark/benchmark.h>

#include <vector>

#include "roughprob/laws.hpp"
#include "roughprob/measure.hpp"
#include "roughprob/space.hpp"
#include "roughprob/variable.hpp"

namespace {

roughprob::ApproximationSpace example_space() {
  return roughprob::build_space(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", {"1"}},
       {"2", {"1", "2"}},
       {"3", {"3"}},
       {"4", {"4"}},
       {"5", {"1", "5", "6"}},
       {"6", {"1", "5", "6"}}});
}

void BM_RoughProbability(benchmark::State& state) {
  const auto space = example_space();
  const auto a = space.event_of_labels(
      std::vector<std::string>{"1", "3", "5"});
  for (auto _ : state) {
    auto pair = rough_prob(space, a);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_RoughProbability);

void BM_VariableAnalysis(benchmark::State& state) {
  const auto space = example_space();
  std::vector<roughprob::Rational> values;
  for (long long i = 1; i <= 6; ++i) values.emplace_back(i);
  for (auto _ : state) {
    const roughprob::RoughVariable var = build_variable(space, values);
    auto v = variance_formula(var);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_VariableAnalysis);

void BM_EnumerateSpaces(benchmark::State& state) {
  const std::vector<std::uint64_t> seeds = {1, 2};
  for (auto _ : state) {
    auto spaces =
        roughprob::enumerate_spaces(static_cast<int>(state.range(0)), seeds);
    benchmark::DoNotOptimize(spaces);
  }
}
BENCHMARK(BM_EnumerateSpaces)->Arg(2)->Arg(3);

void BM_LawSuite(benchmark::State& state) {
  roughprob::SuiteConfig config;
  config.n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto reports = roughprob::run_suite(config);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_LawSuite)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "bruhat/fixtures.hpp"
#include "bruhat/special.hpp"

using namespace bruhat;

namespace {

TransvectionSet fixture_action(const char* label) {
  return transvections_from_sigma(fixture_sigma(e_w0_fixture(TypeLabel::parse(label))));
}

void BM_Fixture(benchmark::State& state, const char* label, unsigned threads) {
  const auto action = fixture_action(label);
  EnumerationOptions opts;
  opts.threads = threads;
  for (auto _ : state) {
    auto s = enumerate_orbits(action, opts);
    benchmark::DoNotOptimize(s.orbit_count);
  }
  state.counters["d"] = action.dimension();
  state.counters["states/s"] = benchmark::Counter(static_cast<double>(std::uint64_t{1} << action.dimension()),
                                                  benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Ladder(benchmark::State& state) {
  const auto ladder = ladder_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbits(ladder.action).orbit_count);
  state.counters["states/s"] = benchmark::Counter(static_cast<double>(std::uint64_t{1} << (2 * state.range(0))),
                                                  benchmark::Counter::kIsIterationInvariantRate);
}

void BM_FixedPoints(benchmark::State& state) {
  const auto action = fixture_action("F4");
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points_linear(action).count);
}

void BM_BuildSigma(benchmark::State& state) {
  const auto f = e_w0_fixture(TypeLabel::parse("F4"));
  for (auto _ : state) benchmark::DoNotOptimize(build_sigma(f.word, f.cartan).edges().size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Fixture, B4, "B4", 1u)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fixture, D5, "D5", 1u)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fixture, F4, "F4", 1u)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK_CAPTURE(BM_Fixture, F4_parallel, "F4", 4u)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK(BM_Ladder)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedPoints);
BENCHMARK(BM_BuildSigma);

BENCHMARK_MAIN();

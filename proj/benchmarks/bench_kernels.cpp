#include <benchmark/benchmark.h>

#include <random>

#include "motifminer/distances.hpp"
#include "motifminer/mining.hpp"
#include "motifminer/representation.hpp"
#include "motifminer/simulator.hpp"

using namespace motifminer;

namespace {

Series simulated_day(std::uint64_t seed) {
  SimConfig cfg;
  cfg.rng_seed = seed;
  cfg.days = 1.0;
  return generate_nonpattern(cfg);
}

Representation day_representation() {
  static const Representation rep = represent(simulated_day(1), RepresentationConfig{});
  return rep;
}

void BM_LcssCount(benchmark::State& state) {
  const Representation rep = day_representation();
  const auto len = static_cast<std::size_t>(state.range(0));
  const Series a = slice(rep.preprocessed, 0, len - 1);
  const Series b = slice(rep.preprocessed, 600, 600 + len - 1);
  const auto p = LcssParams::for_schema(a.schema(), 0.06, 25);
  for (auto _ : state) benchmark::DoNotOptimize(lcss_count(a, b, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcssCount)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_Dtw(benchmark::State& state) {
  const Representation rep = day_representation();
  const auto len = static_cast<std::size_t>(state.range(0));
  const Series a = slice(rep.preprocessed, 0, len - 1);
  const Series b = slice(rep.preprocessed, 600, 600 + len - 1);
  for (auto _ : state) benchmark::DoNotOptimize(dtw_distance(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dtw)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_Mindist(benchmark::State& state) {
  const Representation rep = day_representation();
  const WindowMatrix w(rep.symbolic, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mindist(w.word(i % w.count()), w.word((i + 97) % w.count()), 40, rep.tables));
    ++i;
  }
}
BENCHMARK(BM_Mindist);

void BM_Represent(benchmark::State& state) {
  const Series raw = simulated_day(2);
  for (auto _ : state) benchmark::DoNotOptimize(represent(raw, RepresentationConfig{}));
}
BENCHMARK(BM_Represent)->Unit(benchmark::kMillisecond);

void BM_Projection(benchmark::State& state) {
  const Representation rep = day_representation();
  const WindowMatrix w(rep.symbolic, 4);
  ProjectionConfig cfg;
  cfg.proj = 40;
  cfg.rng_seed = 3;
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(project(w, cfg, threads));
}
BENCHMARK(BM_Projection)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();

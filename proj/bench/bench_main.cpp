// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "gontet/batch.hpp"
#include "gontet/gon.hpp"
#include "gontet/identities.hpp"
#include "gontet/random.hpp"
#include "gontet/tet.hpp"

namespace {

using namespace gontet;

std::vector<Triple> triples(std::size_t n, int max) {
  InstanceGenerator gen(11);
  std::vector<Triple> out(n);
  for (auto& t : out) t = gen.triple(max);
  return out;
}

std::vector<TetLabels> tets(std::size_t n, int max) {
  InstanceGenerator gen(12);
  std::vector<TetLabels> out(n);
  for (auto& t : out) t = gen.tet(max);
  return out;
}

void BM_Gon3Serial(benchmark::State& state) {
  const auto in = triples(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(gon3_batch_serial(in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Gon3Parallel(benchmark::State& state) {
  const auto in = triples(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(gon3_batch(in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TetSerial(benchmark::State& state) {
  const auto in = tets(static_cast<std::size_t>(state.range(0)), 30);
  for (auto _ : state) benchmark::DoNotOptimize(tet_batch_serial(in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TetParallel(benchmark::State& state) {
  const auto in = tets(static_cast<std::size_t>(state.range(0)), 30);
  for (auto _ : state) benchmark::DoNotOptimize(tet_batch(in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SixjSerial(benchmark::State& state) {
  const auto in = tets(static_cast<std::size_t>(state.range(0)), 50);
  for (auto _ : state) benchmark::DoNotOptimize(sixj_batch_serial(in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SixjParallel(benchmark::State& state) {
  const auto in = tets(static_cast<std::size_t>(state.range(0)), 50);
  for (auto _ : state) benchmark::DoNotOptimize(sixj_batch(in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CubeSerial(benchmark::State& state) {
  const auto edges = CubeLabels::uniform(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cube_serial(edges));
}

void BM_CubeParallel(benchmark::State& state) {
  const auto edges = CubeLabels::uniform(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cube(edges));
}

/// The single-evaluation latency target.
void BM_TetSingle(benchmark::State& state) {
  const TetLabels t{{50, 30, 76}, {92, 48, 84}};
  for (auto _ : state) benchmark::DoNotOptimize(tet(t));
}

}  // namespace

BENCHMARK(BM_Gon3Serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gon3Parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TetSerial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TetParallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SixjSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SixjParallel)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CubeSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubeParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TetSingle)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "bmcif/enumerate_aof.hpp"
#include "bmcif/enumerate_distinct.hpp"
#include "bmcif/epsilon.hpp"
#include "bmcif/frontier.hpp"
#include "bmcif/generators.hpp"
#include "bmcif/mcf.hpp"

namespace {

bmcif::Instance random_instance(int nodes, int arcs, std::uint64_t seed) {
  bmcif::RandomConfig cfg;
  cfg.node_count = nodes;
  cfg.arc_count = arcs;
  cfg.seed = seed;
  return bmcif::gen_random(cfg);
}

void BM_ScalarMcf(benchmark::State& state) {
  bmcif::Instance inst = random_instance(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(1)), 1);
  bmcif::ScalarCost cost = bmcif::cost_row1(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmcif::solve_scalar_mcf(inst, cost));
  }
}
BENCHMARK(BM_ScalarMcf)->Args({50, 100})->Args({100, 200})->Args({200, 400});

void BM_ExtremePoints(benchmark::State& state) {
  bmcif::Instance inst = random_instance(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(1)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmcif::extreme_supported_points(inst));
  }
}
BENCHMARK(BM_ExtremePoints)->Args({50, 100})->Args({100, 200});

void BM_AofEnumeration(benchmark::State& state) {
  bmcif::Instance inst =
      bmcif::gen_example_path_cycles(static_cast<int>(state.range(0)), 10, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmcif::all_supported_flows(inst));
  }
}
BENCHMARK(BM_AofEnumeration)->Arg(5)->Arg(6);

void BM_AdjustedSweep(benchmark::State& state) {
  bmcif::Instance inst =
      bmcif::gen_example_backarcs(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmcif::all_supported_vectors_adjusted(inst));
  }
}
BENCHMARK(BM_AdjustedSweep)->Arg(5)->Arg(8)->Arg(10);

void BM_EpsilonSweep(benchmark::State& state) {
  bmcif::Instance inst =
      bmcif::gen_example_backarcs(static_cast<int>(state.range(0)), 5);
  bmcif::EpsilonVariant variant = state.range(1) == 0
                                      ? bmcif::EpsilonVariant::standard_form
                                      : bmcif::EpsilonVariant::compact_form;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bmcif::all_supported_vectors_epsilon(inst, variant));
  }
}
BENCHMARK(BM_EpsilonSweep)->Args({5, 0})->Args({5, 1})->Args({8, 0})->Args({8, 1});

}  // namespace

BENCHMARK_MAIN();

// Serial vs OpenMP timings for the three parallel kernels.

#include <benchmark/benchmark.h>

#include <memory>

#include "cellred/klcells.hpp"
#include "cellred/sl3lab.hpp"

using namespace cellred;

namespace {

const KLData& a4_kl() {
  static const KLData kl =
      compute_kl(std::make_shared<const WeylGroup>(WeylGroup::generate(CartanType('A', 4))), 120, Exec::Serial);
  return kl;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_StructureConstants(benchmark::State& state) {
  const auto& kl = a4_kl();
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(kl.mul_tables(), exec_of(state)));
}

void BM_Associativity(benchmark::State& state) {
  static const JRing j = j_ring(a4_kl(), a_function(a4_kl()), Exec::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(find_associativity_violation(j.gamma(), exec_of(state)));
}

void BM_RankModP(benchmark::State& state) {
  const auto maps = sl3::tau_maps(sl3::build_incidence(static_cast<std::uint32_t>(state.range(1))));
  const auto dense = maps.tau.dense();
  for (auto _ : state)
    benchmark::DoNotOptimize(rank_mod_p(dense, maps.tau.rows, maps.tau.cols, maps.p, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_StructureConstants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Associativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankModP)->Args({0, 23})->Args({1, 23})->Args({0, 31})->Args({1, 31})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

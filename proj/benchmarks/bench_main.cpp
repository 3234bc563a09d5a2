#include <benchmark/benchmark.h>

#include "gft/catalog.hpp"
#include "gft/lattice.hpp"
#include "gft/radicals.hpp"

namespace {

void BM_StabChainS6(benchmark::State& state) {
  for (auto _ : state) {
    gft::Group g = gft::symmetric_group(6);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_StabChainS6);

void BM_FstarS4(benchmark::State& state) {
  gft::Group s4 = gft::symmetric_group(4);
  for (auto _ : state) {
    gft::Ctx ctx = gft::make_ctx(s4);
    benchmark::DoNotOptimize(gft::f_star(gft::local_group(ctx)).count());
  }
}
BENCHMARK(BM_FstarS4);

void BM_SubgroupsS4(benchmark::State& state) {
  gft::Group s4 = gft::symmetric_group(4);
  gft::Ctx ctx = gft::make_ctx(s4);
  gft::LocalGroup g = gft::local_group(ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(gft::all_subgroups(g).size());
}
BENCHMARK(BM_SubgroupsS4);

}  // namespace

BENCHMARK_MAIN();

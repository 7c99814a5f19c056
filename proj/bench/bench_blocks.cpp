// Serial reference vs OpenMP kernels, and dom vs enumeration.
#include <benchmark/benchmark.h>

#include <map>

#include "twoblocks/blocks.hpp"
#include "twoblocks/generate.hpp"

using namespace twoblocks;

namespace {

const DiGraph& fixture(std::int64_t n) {
  static std::map<std::int64_t, DiGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, random_strong_graph(n, 5 * n, 1)).first;
  return it->second;
}

template <BlockKind Kind, Algorithm Algo, Execution Exec>
void bm_blocks(benchmark::State& state) {
  const DiGraph& g = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_blocks(g, Kind, Algo, Exec));
  state.SetComplexityN(state.range(0));
}

}  // namespace

#define TWOBLOCKS_BENCH(kind, algo, exec) \
  BENCHMARK(bm_blocks<BlockKind::kind, Algorithm::algo, Execution::exec>)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond)

TWOBLOCKS_BENCH(two_directed, dom, serial);
TWOBLOCKS_BENCH(two_directed, dom, parallel);
TWOBLOCKS_BENCH(two_directed, enumeration, serial);
TWOBLOCKS_BENCH(two_directed, enumeration, parallel);
TWOBLOCKS_BENCH(two_strong, dom, serial);
TWOBLOCKS_BENCH(two_strong, dom, parallel);
TWOBLOCKS_BENCH(two_strong, enumeration, serial);
TWOBLOCKS_BENCH(two_strong, enumeration, parallel);
TWOBLOCKS_BENCH(two_edge, dom, serial);
TWOBLOCKS_BENCH(two_edge, dom, parallel);
TWOBLOCKS_BENCH(two_edge, enumeration, serial);
TWOBLOCKS_BENCH(two_edge, enumeration, parallel);
TWOBLOCKS_BENCH(two_directed, automatic, parallel);

BENCHMARK_MAIN();

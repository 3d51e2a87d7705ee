#include <benchmark/benchmark.h>

#include "mag/certificate.hpp"
#include "mag/generator.hpp"
#include "mag/topology.hpp"

using namespace mag;

namespace {

Mag uniform_n(std::uint32_t tau1, std::uint32_t tau2, std::uint64_t seed = 1) {
  return generate({MagSignature({tau1, tau2}), GenKind::UniformHalf, seed});
}

void BM_Generate(benchmark::State& state) {
  const auto tau = static_cast<std::uint32_t>(state.range(0));
  MagSignature sig({tau, tau});
  for (auto _ : state) {
    Mag g = generate({sig, GenKind::UniformHalf, 1});
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sig.pair_space_size()));
}
BENCHMARK(BM_Generate)->Arg(8)->Arg(16)->Arg(32);

void BM_Diameter(benchmark::State& state) {
  Mag g = uniform_n(static_cast<std::uint32_t>(state.range(0)), 16);
  DenseAdjacency adj(g);
  for (auto _ : state) benchmark::DoNotOptimize(composite_diameter(adj).value);
}
BENCHMARK(BM_Diameter)->Arg(8)->Arg(16)->Arg(32);

void BM_MinCommonNeighbors(benchmark::State& state) {
  Mag g = uniform_n(static_cast<std::uint32_t>(state.range(0)), 16);
  DenseAdjacency adj(g);
  for (auto _ : state) {
    std::uint64_t min_cn = adj.n();
    for (std::uint64_t b = 1; b < adj.n(); ++b)
      for (std::uint64_t a = 0; a < b; ++a)
        min_cn = std::min(min_cn, adj.common_neighbors(a, b));
    benchmark::DoNotOptimize(min_cn);
  }
}
BENCHMARK(BM_MinCommonNeighbors)->Arg(8)->Arg(16);

void BM_Rigidity(benchmark::State& state) {
  Mag g = uniform_n(8, static_cast<std::uint32_t>(state.range(0)));
  DenseAdjacency adj(g);
  for (auto _ : state) benchmark::DoNotOptimize(is_rigid(adj).status);
}
BENCHMARK(BM_Rigidity)->Arg(8)->Arg(16);

void BM_Compress(benchmark::State& state) {
  Mag g = generate({MagSignature({8, static_cast<std::uint32_t>(state.range(0))}),
                    GenKind::Banded, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(deficiency_certificate(g).deficiency_lb);
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(g.characteristic().size()));
}
BENCHMARK(BM_Compress)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();

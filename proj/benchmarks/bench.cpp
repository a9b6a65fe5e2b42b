#include <benchmark/benchmark.h>

#include <algorithm>

#include "hiso/gamma.hpp"
#include "hiso/graph_iso.hpp"
#include "hiso/halgebra.hpp"
#include "hiso/hgroup.hpp"
#include "hiso/rng.hpp"

namespace {

using namespace hiso;

Graph k3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return g;
}

void bm_group_mul(benchmark::State& state) {
  HGroup g(HAlgebra::h_algebra(cycle(static_cast<int>(state.range(0))), Prime(3)));
  RandomSource rng(1);
  HGroupElement x = g.random_element(rng);
  HGroupElement y = g.random_element(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.mul(x, y));
  }
}
BENCHMARK(bm_group_mul)->Arg(4)->Arg(8);

void bm_group_power(benchmark::State& state) {
  HGroup g(HAlgebra::h_algebra(cycle(6), Prime(5)));
  RandomSource rng(2);
  HGroupElement x = g.random_element(rng);
  uint64_t k = 117;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.power(x, k));
  }
}
BENCHMARK(bm_group_power);

void bm_graph_iso(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g1 = cycle(n);
  VertexBijection perm = VertexBijection::identity(n);
  for (int i = 0; i < n; ++i) perm.forward[i] = (i * 2 + 1) % n;
  Graph g2(n);
  for (auto [i, j] : g1.edges()) {
    int a = perm(i), b = perm(j);
    g2.add_edge(std::min(a, b), std::max(a, b));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_iso(g1, g2));
  }
}
BENCHMARK(bm_graph_iso)->Arg(5)->Arg(7);

void bm_gamma_build(benchmark::State& state) {
  CayleyGroup g = CayleyGroup::dihedral(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_gamma(g));
  }
}
BENCHMARK(bm_gamma_build)->Arg(2)->Arg(4);

void bm_multigraph_iso(benchmark::State& state) {
  CayleyGroup z4 = CayleyGroup::cyclic(4);
  DiMultigraph m1 = build_gamma(z4);
  DiMultigraph m2 = build_gamma(z4.relabeled({1, 2, 3, 0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multigraph_iso(m1, m2));
  }
}
BENCHMARK(bm_multigraph_iso);

void bm_recover_graph(benchmark::State& state) {
  HAlgebra base = HAlgebra::h_algebra(k3(), Prime(3));
  HAlgebra scrambled = scramble_basis(base, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover_graph(scrambled));
  }
}
BENCHMARK(bm_recover_graph);

}  // namespace

BENCHMARK_MAIN();

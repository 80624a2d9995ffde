#include <benchmark/benchmark.h>

#include <random>

#include "raag/verify.hpp"

using namespace raag;

namespace {

Graph path_graph(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(names, edges);
}

void bm_lattice(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    Context ctx(g);
    benchmark::DoNotOptimize(ctx.lattice().closed_sets().size());
  }
}
BENCHMARK(bm_lattice)->Arg(6)->Arg(10)->Arg(14);

void bm_normal_form(benchmark::State& state) {
  Context ctx(random_graph(8, 7));
  std::mt19937_64 rng(5);
  std::vector<Letter> letters;
  for (int i = 0; i < state.range(0); ++i)
    letters.push_back({static_cast<int>(rng() % 8), (rng() & 1) ? 1 : -1});
  for (auto _ : state) benchmark::DoNotOptimize(PCWord::from_letters(ctx, letters).length());
}
BENCHMARK(bm_normal_form)->Arg(32)->Arg(256)->Arg(1024);

void bm_cyclic_reduce(benchmark::State& state) {
  Context ctx(random_graph(8, 7));
  std::mt19937_64 rng(9);
  std::vector<Letter> letters;
  for (int i = 0; i < state.range(0); ++i)
    letters.push_back({static_cast<int>(rng() % 8), (rng() & 1) ? 1 : -1});
  PCWord u = PCWord::from_letters(ctx, letters);
  for (auto _ : state) benchmark::DoNotOptimize(u.cyclic_reduce().core.length());
}
BENCHMARK(bm_cyclic_reduce)->Arg(64)->Arg(512);

void bm_matrix_decompose(benchmark::State& state) {
  Context ctx(path_graph(static_cast<int>(state.range(0))));
  StabPattern p = StabPattern::of(ctx, ctx.graph().all());
  std::uint64_t seed = 11;
  for (auto _ : state) {
    StabMatrix a = sample_member(p, 4, seed++);
    benchmark::DoNotOptimize(decompose(a).size());
  }
}
BENCHMARK(bm_matrix_decompose)->Arg(4)->Arg(7)->Arg(10);

void bm_factor_semidirect(benchmark::State& state) {
  Context ctx(path_graph(5));
  auto specs = enumerate_elementary_conj(ctx);
  Automorphism theta = elementary_conj(ctx, specs[0])
                           .then(atom_to_automorphism(ctx, Transvection{0, 1, 2}))
                           .then(elementary_conj(ctx, specs[1]));
  for (auto _ : state) benchmark::DoNotOptimize(factor_semidirect(theta).phi.image(0).length());
}
BENCHMARK(bm_factor_semidirect);

}  // namespace

BENCHMARK_MAIN();

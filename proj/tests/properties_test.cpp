#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "raag/verify.hpp"

using namespace raag;
using namespace raag::testing;

namespace {

std::vector<Letter> random_letters(const Graph& g, std::mt19937_64& rng, int len) {
  std::vector<Letter> out;
  for (int i = 0; i < len; ++i)
    out.push_back({static_cast<int>(rng() % g.size()), (rng() & 1) ? 1 : -1});
  return out;
}

}  // namespace

TEST_CASE("normal form is invariant under commutation moves and free insertions") {
  for (const Graph& g : {p3(), random_graph(5, 3), random_graph(6, 5)}) {
    Context ctx(g);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Letter> raw = random_letters(g, rng, 1 + static_cast<int>(rng() % 10));
      PCWord base = PCWord::from_letters(ctx, raw);

      std::vector<Letter> moved = raw;
      for (int k = 0; k < 20; ++k) {
        if (moved.size() < 2) break;
        size_t i = rng() % (moved.size() - 1);
        if (g.adjacent(moved[i].vertex, moved[i + 1].vertex)) std::swap(moved[i], moved[i + 1]);
      }
      CHECK(PCWord::from_letters(ctx, moved) == base);

      std::vector<Letter> padded = raw;
      size_t at = rng() % (padded.size() + 1);
      Letter l{static_cast<int>(rng() % g.size()), 1};
      padded.insert(padded.begin() + at, {l, {l.vertex, -1}});
      CHECK(PCWord::from_letters(ctx, padded) == base);
    }
  }
}

TEST_CASE("cyclic reduction reaches a minimal core") {
  for (const Graph& g : {p3(), random_graph(5, 13)}) {
    Context ctx(g);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      PCWord u = PCWord::from_letters(ctx, random_letters(g, rng, 1 + static_cast<int>(rng() % 8)));
      auto [d, core] = u.cyclic_reduce();
      CHECK(d.inverse() * core * d == u);
      // no single-letter conjugation shortens the core further
      for (int v = 0; v < g.size(); ++v)
        for (int s : {1, -1}) {
          PCWord t = PCWord::generator(ctx, v, s);
          CHECK(core.conjugated_by(t).length() >= core.length());
        }
    }
  }
}

TEST_CASE("block decomposition multiplies back and blocks commute") {
  Context ctx(random_graph(5, 21));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    PCWord u =
        PCWord::from_letters(ctx, random_letters(ctx.graph(), rng, 1 + static_cast<int>(rng() % 8)));
    PCWord core = u.cyclic_reduce().core;
    auto blocks = core.block_decomposition();
    PCWord prod(&ctx);
    for (const PCWord& b : blocks) prod = prod * b;
    CHECK(prod == core);
    for (size_t i = 0; i < blocks.size(); ++i)
      for (size_t j = i + 1; j < blocks.size(); ++j)
        CHECK(blocks[i] * blocks[j] == blocks[j] * blocks[i]);
  }
}

TEST_CASE("stripping left divisors is exact") {
  Context ctx(random_graph(5, 31));
  const Graph& g = ctx.graph();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    PCWord u = PCWord::from_letters(ctx, random_letters(g, rng, 1 + static_cast<int>(rng() % 8)));
    VertexSet y(rng() % (VertexSet::full(g.size()).bits + 1));
    auto [prefix, rest] = u.strip_left_divisors(y);
    CHECK(prefix.alpha().subset_of(y));
    CHECK(prefix * rest == u);
    for (int v : y.members())
      for (int s : {1, -1}) CHECK(!rest.has_left_divisor({v, s}));
  }
}

TEST_CASE("reduced-scale verification suite is clean") {
  CheckOptions opt;
  opt.max_vertices = 4;
  opt.random_graphs = 15;
  opt.random_max_vertices = 6;
  opt.conj_max_vertices = 4;
  opt.matrix_pairs = 60;
  opt.generator_words = 40;
  opt.matrix_samples = 30;
  opt.factor_samples = 8;
  opt.seed = 5;
  for (const CheckResult& r : run_verification(opt)) {
    INFO(r.name, ": ", r.first_failure);
    CHECK(r.failures == 0);
    CHECK(r.cases > 0);
  }
}

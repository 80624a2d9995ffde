#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"

using namespace raag;
using namespace raag::testing;

TEST_CASE("elementary conjugation inventory") {
  Context ctx(p3());
  const Graph& g = ctx.graph();
  auto specs = enumerate_elementary_conj(ctx);
  REQUIRE(specs.size() == 2);
  CHECK(specs[0] == ElemConjSpec{g.vertex("a"), vs(g, "c"), 1});
  CHECK(specs[1] == ElemConjSpec{g.vertex("c"), vs(g, "a"), 1});
  CHECK(enumerate_elementary_conj(Context(k3())).empty());
}

TEST_CASE("elementary conjugation maps") {
  Context ctx(p3());
  const Graph& g = ctx.graph();
  ElemConjSpec spec{g.vertex("a"), vs(g, "c"), 1};
  AutMap m = elementary_conj_map(ctx, spec);
  CHECK(m.image(g.vertex("a")) == w(ctx, "a"));
  CHECK(m.image(g.vertex("b")) == w(ctx, "b"));
  CHECK(m.image(g.vertex("c")) == w(ctx, "a^-1 c a"));

  CHECK_THROWS_AS(elementary_conj_map(ctx, ElemConjSpec{g.vertex("a"), vs(g, "bc"), 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(elementary_conj_map(ctx, ElemConjSpec{g.vertex("a"), vs(g, "c"), 2}),
                  std::invalid_argument);

  ElemConjSpec back = spec;
  back.direction = -1;
  CHECK(elementary_conj_map(ctx, spec).then(elementary_conj_map(ctx, back)) ==
        AutMap::identity(ctx));
}

TEST_CASE("inner automorphisms") {
  Context ctx(p3());
  CHECK(inner_map(PCWord(&ctx)) == AutMap::identity(ctx));
  Automorphism ia = inner(w(ctx, "a"));
  CHECK(ia.then(inner(w(ctx, "a^-1"))).map() == AutMap::identity(ctx));
  // b is central enough: it commutes with both neighbors
  CHECK(inner_map(w(ctx, "b")) == AutMap::identity(ctx));
}

TEST_CASE("conjugating predicate") {
  Context ctx(p3());
  for (const ElemConjSpec& spec : enumerate_elementary_conj(ctx))
    CHECK(is_conjugating(elementary_conj_map(ctx, spec)));
  CHECK(!is_conjugating(atom_to_automap(ctx, Transvection{0, 1, 1})));
  CHECK(is_conjugating(AutMap::identity(ctx)));
}

TEST_CASE("witness search") {
  Context ctx(p3());
  const Graph& g = ctx.graph();
  Automorphism stab = atom_to_automorphism(ctx, Transvection{0, 1, 1});
  for (VertexSet y : ctx.lattice().closed_sets()) {
    auto wit = conj_stab_witness(stab, y);
    REQUIRE(wit.has_value());
    CHECK(wit->is_identity());
  }

  Automorphism theta = elementary_conj(ctx, ElemConjSpec{g.vertex("a"), vs(g, "c"), 1});
  auto wbc = conj_stab_witness(theta, vs(g, "bc"));
  REQUIRE(wbc.has_value());
  CHECK(*wbc == w(ctx, "a"));
  auto wab = conj_stab_witness(theta, vs(g, "ab"));
  REQUIRE(wab.has_value());
  CHECK(wab->is_identity());

  CHECK_THROWS_AS(conj_stab_witness(theta, vs(g, "a")), std::invalid_argument);
}

TEST_CASE("semidirect factorization") {
  Context ctx(p3());
  const Graph& g = ctx.graph();

  Automorphism stab = atom_to_automorphism(ctx, Transvection{0, 1, 2});
  auto f1 = factor_semidirect(stab);
  CHECK(f1.tau == AutMap::identity(ctx));
  CHECK(f1.phi == stab.map());

  Automorphism conj = elementary_conj(ctx, ElemConjSpec{g.vertex("a"), vs(g, "c"), 1});
  auto f2 = factor_semidirect(conj);
  CHECK(f2.tau == conj.map());
  CHECK(f2.phi == AutMap::identity(ctx));

  Automorphism mixed = conj.then(atom_to_automorphism(ctx, Transvection{0, 1, 1}));
  auto f3 = factor_semidirect(mixed);
  CHECK(f3.tau == conj.map());
  CHECK(f3.phi == atom_to_automap(ctx, Transvection{0, 1, 1}));
  CHECK(f3.tau.then(f3.phi) == mixed.map());
}

TEST_CASE("factorization rejects non-members") {
  Graph e2({"a", "b"}, std::vector<std::pair<int, int>>{});
  Context ctx(e2);
  // the vertex swap preserves no parabolic up to conjugacy
  AutMap swap = AutMap::from_images(ctx, {w(ctx, "b"), w(ctx, "a")});
  Automorphism theta(swap, swap);
  CHECK_THROWS_AS(factor_semidirect(theta), std::domain_error);
}

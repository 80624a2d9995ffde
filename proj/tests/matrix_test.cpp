#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"

using namespace raag;
using namespace raag::testing;

TEST_CASE("exact linear algebra") {
  CHECK(determinant(im({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(im({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntMatrix{}) == 1);
  IntMatrix a = im({{1, 2}, {1, 3}});
  CHECK(mat_mul(a, unimodular_inverse(a)) == identity_matrix(2));
  CHECK_THROWS_AS(unimodular_inverse(im({{2, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("pattern shape") {
  Context ctx(p3());
  StabPattern p = StabPattern::of(ctx, ctx.graph().all());
  // order (a, c, b): three singleton blocks
  CHECK(p.vertices() == std::vector<int>{0, 2, 1});
  CHECK(p.blocks().size() == 3);
  CHECK(p.allows(0, 2));
  CHECK(p.allows(1, 2));
  CHECK(!p.allows(0, 1));
  CHECK(!p.allows(2, 0));

  Context kctx(k3());
  StabPattern kp = StabPattern::of(kctx, k3().all());
  CHECK(kp.blocks().size() == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(kp.allows(i, j));

  CHECK(StabPattern::of(ctx, vs(ctx.graph(), "b")).dim() == 1);
  CHECK_THROWS_AS(StabPattern::of(ctx, vs(ctx.graph(), "a")), std::invalid_argument);
}

TEST_CASE("pattern membership") {
  Context ctx(p3());
  StabPattern p = StabPattern::of(ctx, ctx.graph().all());
  CHECK(StabMatrix::is_member(identity_matrix(3), p));
  CHECK(StabMatrix::is_member(im({{1, 0, 5}, {0, -1, 2}, {0, 0, 1}}), p));
  CHECK(!StabMatrix::is_member(im({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), p));
  CHECK(!StabMatrix::is_member(im({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), p));  // det 2 block
  CHECK_THROWS_AS(StabMatrix::checked(p, im({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("products and inverses") {
  Context ctx(p3());
  StabPattern p = StabPattern::of(ctx, ctx.graph().all());
  StabMatrix a = StabMatrix::checked(p, im({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  StabMatrix b = StabMatrix::checked(p, im({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}));
  CHECK((a * b).entries() == im({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK((a * a.inverse()).entries() == identity_matrix(3));
}

TEST_CASE("minors") {
  Context ctx(p3());
  const Graph& g = ctx.graph();
  StabPattern p = StabPattern::of(ctx, g.all());
  StabMatrix a = StabMatrix::checked(p, im({{1, 0, 5}, {0, -1, 2}, {0, 0, 1}}));
  CHECK(a.minor_to(g.all()) == a);
  CHECK(a.minor_to(vs(g, "b")).entries() == im({{1}}));
  CHECK(a.minor_to(vs(g, "ab")).entries() == im({{1, 5}, {0, 1}}));
  CHECK_THROWS_AS(a.minor_to(vs(g, "a")), std::invalid_argument);
}

TEST_CASE("embeddings") {
  Context ctx(p3());
  const Graph& g = ctx.graph();
  StabPattern small = StabPattern::of(ctx, vs(g, "ab"));
  StabMatrix e = StabMatrix::identity(small).embed_into(g.all());
  CHECK(e.entries() == identity_matrix(3));
  StabMatrix q = StabMatrix::checked(small, im({{1, 5}, {0, 1}}));
  CHECK(q.embed_into(g.all()).entries() == im({{1, 0, 5}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(q.embed_into(g.all()).minor_to(vs(g, "ab")) == q);
}

TEST_CASE("unipotent-diagonal split") {
  Context ctx(p3());
  StabPattern p = StabPattern::of(ctx, ctx.graph().all());
  StabMatrix a = StabMatrix::checked(p, im({{-1, 0, 3}, {0, 1, 0}, {0, 0, 1}}));
  auto [u, d] = a.split_semidirect();
  CHECK(u.entries() == im({{1, 0, 3}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(d.entries() == im({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(u.is_block_unipotent());
  CHECK(!u.is_block_diagonal());
  CHECK(d.is_block_diagonal());
  CHECK((u * d).entries() == a.entries());

  StabMatrix id = StabMatrix::identity(p);
  CHECK(id.is_block_diagonal());
  CHECK(id.is_block_unipotent());
  auto [iu, idd] = d.split_semidirect();
  CHECK(iu.entries() == identity_matrix(3));
  auto [uu, ud] = u.split_semidirect();
  CHECK(ud.entries() == identity_matrix(3));
}

TEST_CASE("maximal-closure support condition") {
  Context ctx(p3());
  // rows/columns in order (a, c, b); row b may only touch the maximal
  // vertices above b, row a only a itself
  CHECK(max_pattern_check(im({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), ctx));
  CHECK(!max_pattern_check(im({{1, 0, 1}, {0, 1, 0}, {1, 1, 0}}), ctx));
  Context kctx(k3());
  CHECK(max_pattern_check(im({{1, 2, 3}, {0, 1, 4}, {0, 0, 1}}), kctx));
  CHECK_THROWS_AS(max_pattern_check(im({{1}}), ctx), std::invalid_argument);
}

TEST_CASE("pattern sampling") {
  Context ctx(p3());
  StabPattern p = StabPattern::of(ctx, ctx.graph().all());
  StabMatrix a = sample_member(p, 5, 42);
  StabMatrix b = sample_member(p, 5, 42);
  CHECK(a == b);
  CHECK(StabMatrix::is_member(a.entries(), p));
  CHECK(sample_member(p, 0, 1).entries() == identity_matrix(3));
}

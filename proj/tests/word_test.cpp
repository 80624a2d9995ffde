#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"

using namespace raag;
using namespace raag::testing;

TEST_CASE("normal form") {
  Context ctx(p3());
  // a,b commute, then a cancels
  CHECK(w(ctx, "a b a^-1") == w(ctx, "b"));
  // commuting pair sorted by the order a < c < b
  CHECK(w(ctx, "b a").letters() == w(ctx, "a b").letters());
  // non-commuting pair untouched
  CHECK(w(ctx, "a c").letters() == std::vector<Letter>{{0, 1}, {2, 1}});
  CHECK(PCWord::from_letters(ctx, {{0, 1}, {1, 1}, {0, -1}}) == w(ctx, "b"));
  CHECK_THROWS_AS(PCWord::from_letters(ctx, {{7, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PCWord::from_letters(ctx, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("group operations") {
  Context ctx(p3());
  PCWord u = w(ctx, "a c");
  CHECK(u * PCWord(&ctx) == u);
  CHECK(u * w(ctx, "c^-1") == w(ctx, "a"));
  CHECK(u.inverse() == w(ctx, "c^-1 a^-1"));
  CHECK(u * u.inverse() == PCWord(&ctx));

  Context other(p3());
  CHECK_THROWS_AS(require_same_context(u, w(other, "a")), std::invalid_argument);
}

TEST_CASE("length and support") {
  Context ctx(p3());
  CHECK(PCWord(&ctx).length() == 0);
  CHECK(PCWord(&ctx).alpha().empty());
  CHECK(w(ctx, "a b c").length() == 3);
  CHECK(w(ctx, "a b c").alpha() == ctx.graph().all());
  PCWord v = w(ctx, "a b a^-1");
  CHECK(v.length() == 1);
  CHECK(v.alpha() == vs(ctx.graph(), "b"));
}

TEST_CASE("left divisors") {
  Context ctx(p3());
  CHECK(w(ctx, "b c").has_left_divisor({1, 1}));
  CHECK(w(ctx, "c b").has_left_divisor({1, 1}));  // b commutes past c
  CHECK(!w(ctx, "c a").has_left_divisor({0, 1}));
  CHECK(w(ctx, "a b").has_left_divisor({1, 1}));  // b commutes past a
  CHECK(!w(ctx, "a").has_left_divisor({0, -1}));
}

TEST_CASE("cyclic reduction") {
  Context ctx(p3());
  auto [d, v] = w(ctx, "a^-1 c a").cyclic_reduce();
  CHECK(d == w(ctx, "a"));
  CHECK(v == w(ctx, "c"));
  CHECK(d.inverse() * v * d == w(ctx, "a^-1 c a"));

  auto [d2, v2] = w(ctx, "a c").cyclic_reduce();
  CHECK(d2.is_identity());
  CHECK(v2 == w(ctx, "a c"));

  // normalization already cancels the commuting conjugator
  auto [d3, v3] = w(ctx, "a^-1 b a").cyclic_reduce();
  CHECK(d3.is_identity());
  CHECK(v3 == w(ctx, "b"));
}

TEST_CASE("block decomposition") {
  Context ctx(p3());
  auto blocks = w(ctx, "a b").block_decomposition();
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == w(ctx, "a"));
  CHECK(blocks[1] == w(ctx, "b"));
  CHECK(w(ctx, "a c").block_decomposition() == std::vector<PCWord>{w(ctx, "a c")});
  CHECK(w(ctx, "c").block_decomposition() == std::vector<PCWord>{w(ctx, "c")});
  CHECK_THROWS_AS(w(ctx, "a^-1 c a").block_decomposition(), std::invalid_argument);
}

TEST_CASE("parabolic membership") {
  Context ctx(p3());
  CHECK(w(ctx, "a b").in_parabolic(vs(ctx.graph(), "ab")));
  CHECK(!w(ctx, "c").in_parabolic(vs(ctx.graph(), "ab")));
  CHECK(PCWord(&ctx).in_parabolic(VertexSet()));
}

TEST_CASE("stripping left divisors") {
  Context ctx(p3());
  VertexSet yb = vs(ctx.graph(), "b");
  auto [p1, r1] = w(ctx, "b c").strip_left_divisors(yb);
  CHECK(p1 == w(ctx, "b"));
  CHECK(r1 == w(ctx, "c"));
  auto [p2, r2] = w(ctx, "c a").strip_left_divisors(vs(ctx.graph(), "a"));
  CHECK(p2.is_identity());
  CHECK(r2 == w(ctx, "c a"));
  auto [p3_, r3] = w(ctx, "a c").strip_left_divisors(yb);
  CHECK(p3_.is_identity());
  CHECK(r3 == w(ctx, "a c"));
}

TEST_CASE("abelian exponents") {
  Context ctx(p3());
  VertexSet s = vs(ctx.graph(), "ab");
  auto e = w(ctx, "a b^-2").abelian_exponents(s);
  CHECK(e == std::vector<long long>{1, -2, 0});
  CHECK(PCWord(&ctx).abelian_exponents(s) == std::vector<long long>{0, 0, 0});
  CHECK(w(ctx, "b a").abelian_exponents(s) == std::vector<long long>{1, 1, 0});
  CHECK_THROWS_AS(w(ctx, "a").abelian_exponents(vs(ctx.graph(), "ac")), std::invalid_argument);
  CHECK_THROWS_AS(w(ctx, "c").abelian_exponents(s), std::invalid_argument);
}

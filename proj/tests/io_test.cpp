#include <stdexcept>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "helpers.hpp"

using namespace raag;
using namespace raag::testing;

TEST_CASE("graph JSON") {
  json j = {{"vertices", {"a", "b", "c"}},
            {"edges", json::array({json::array({"a", "b"}), json::array({"b", "c"})})}};
  Graph g = graph_from_json(j);
  CHECK(g == p3());
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", {"a"}}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", {"a"}}, {"edges", {{"a"}}}}),
                  std::invalid_argument);
}

TEST_CASE("DOT output") {
  std::string dot = graph_to_dot(p3());
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
  Context ctx(p3());
  std::string hasse = hasse_to_dot(ctx.lattice());
  CHECK(hasse.find("digraph") == 0);
  CHECK(hasse.find("rankdir=BT") != std::string::npos);
  CHECK(hasse.find("->") != std::string::npos);
  CHECK(hasse.find("{a,b}") != std::string::npos);
}

TEST_CASE("vertex set JSON") {
  Graph g = p3();
  CHECK(vertex_set_from_json(g, json::array({"a", "c"})) == vs(g, "ac"));
  CHECK(vertex_set_to_json(g, vs(g, "ac")) == json::array({"a", "c"}));
  CHECK_THROWS_AS(vertex_set_from_json(g, json::array({"x"})), std::invalid_argument);
}

TEST_CASE("word literals") {
  Context ctx(p3());
  CHECK(parse_word(ctx, "a b^-2") == PCWord::from_letters(ctx, {{0, 1}, {1, -1}, {1, -1}}));
  CHECK(parse_word(ctx, "a^3").length() == 3);
  CHECK(format_word(parse_word(ctx, "a b^-2")) == "a b^-2");
  CHECK(format_word(PCWord(&ctx)) == "1");
  CHECK(parse_word(ctx, format_word(parse_word(ctx, "c a b"))) == parse_word(ctx, "c a b"));
  CHECK_THROWS_AS(parse_word(ctx, "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(ctx, "a^z"), std::invalid_argument);
}

TEST_CASE("matrix JSON") {
  Context ctx(p3());
  json j = {{"closed_set", {"a", "c", "b"}}, {"rows", {{1, 0, 5}, {0, -1, 2}, {0, 0, 1}}}};
  StabMatrix a = matrix_from_json(ctx, j);
  CHECK(a.at(0, 2) == 5);
  CHECK(matrix_to_json(a) == j);
  json wrong_order = {{"closed_set", {"a", "b", "c"}}, {"rows", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  CHECK_THROWS_AS(matrix_from_json(ctx, wrong_order), std::invalid_argument);
}

TEST_CASE("generator atom JSON") {
  Context ctx(p3());
  json tr = {{"tr", {"a", "b"}}, {"e", 2}};
  CHECK(atom_from_json(ctx, tr) == GeneratorAtom{Transvection{0, 1, 2}});
  CHECK(atom_to_json(ctx, Transvection{0, 1, 2}) == tr);
  CHECK(atom_from_json(ctx, json{{"flip", "b"}}) == GeneratorAtom{SignFlip{1}});
  CHECK_THROWS_AS(atom_from_json(ctx, json{{"nope", 1}}), std::invalid_argument);

  Context kctx(k3());
  json cm = {{"class_move",
              {{"class", {"a", "b", "c"}}, {"rows", {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}}}};
  GeneratorAtom atom = atom_from_json(kctx, cm);
  CHECK(atom_to_json(kctx, atom) == cm);

  GeneratorWord word = word_atoms_from_json(ctx, json::array({tr, {{"flip", "b"}}}));
  CHECK(word.size() == 2);
  CHECK(word_atoms_to_json(ctx, word) == json::array({tr, {{"flip", "b"}}}));
}

TEST_CASE("composition JSON") {
  Context ctx(p3());
  json comp = json::array({
      {{"conj", {{"x", "a"}, {"component", {"c"}}, {"dir", 1}}}},
      {{"tr", {"a", "b"}}, {"e", 1}},
  });
  Automorphism theta = composition_from_json(ctx, comp);
  Automorphism expect = elementary_conj(ctx, ElemConjSpec{0, vs(ctx.graph(), "c"), 1})
                            .then(atom_to_automorphism(ctx, Transvection{0, 1, 1}));
  CHECK(theta.map() == expect.map());

  Automorphism in = composition_from_json(ctx, json::array({{{"inner", "a"}}}));
  CHECK(in.map() == inner_map(w(ctx, "a")));
}

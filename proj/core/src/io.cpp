#include "raag/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace raag {

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON must contain \"vertices\" and \"edges\"");
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a pair of vertex names");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph(std::move(names), edges);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return json{{"vertices", g.names()}, {"edges", edges}};
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v) os << "  \"" << g.name(v) << "\";\n";
  for (auto [u, v] : g.edges()) os << "  \"" << g.name(u) << "\" -- \"" << g.name(v) << "\";\n";
  os << "}\n";
  return os.str();
}

namespace {
std::string set_label(const Graph& g, VertexSet y) {
  std::string s = "{";
  bool first = true;
  for (int v : y.members()) {
    if (!first) s += ",";
    s += g.name(v);
    first = false;
  }
  return s + "}";
}
}  // namespace

std::string hasse_to_dot(const ClosureLattice& lat) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  const auto& sets = lat.closed_sets();
  for (size_t i = 0; i < sets.size(); ++i)
    os << "  n" << i << " [label=\"" << set_label(lat.graph(), sets[i]) << "\"];\n";
  for (auto [lo, hi] : lat.hasse_edges()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

json vertex_set_to_json(const Graph& g, VertexSet y) {
  json out = json::array();
  for (int v : y.members()) out.push_back(g.name(v));
  return out;
}

VertexSet vertex_set_from_json(const Graph& g, const json& j) {
  VertexSet out;
  for (const auto& n : j) out.add(g.vertex(n.get<std::string>()));
  return out;
}

PCWord parse_word(const Context& ctx, const std::string& literal) {
  std::istringstream is(literal);
  std::vector<Letter> letters;
  std::string tok;
  while (is >> tok) {
    std::string name = tok;
    long long exp = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      try {
        exp = std::stoll(tok.substr(pos + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word token: " + tok);
      }
    }
    int v = ctx.graph().vertex(name);
    for (long long k = 0; k < std::llabs(exp); ++k) letters.push_back({v, exp > 0 ? 1 : -1});
  }
  return PCWord::from_letters(ctx, std::move(letters));
}

std::string format_word(const PCWord& w) {
  if (w.is_identity()) return "1";
  const Graph& g = w.context()->graph();
  std::ostringstream os;
  // Run-length collapse of consecutive equal letters.
  const auto& ls = w.letters();
  for (size_t i = 0; i < ls.size();) {
    size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long e = static_cast<long long>(j - i) * ls[i].sign;
    if (i) os << ' ';
    os << g.name(ls[i].vertex);
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

StabMatrix matrix_from_json(const Context& ctx, const json& j) {
  if (!j.is_object() || !j.contains("closed_set") || !j.contains("rows"))
    throw std::invalid_argument("matrix JSON must contain \"closed_set\" and \"rows\"");
  VertexSet y = vertex_set_from_json(ctx.graph(), j.at("closed_set"));
  StabPattern p = StabPattern::of(ctx, y);
  std::vector<std::string> given = j.at("closed_set").get<std::vector<std::string>>();
  for (int i = 0; i < p.dim(); ++i)
    if (ctx.graph().vertex(given[i]) != p.vertices()[i])
      throw std::invalid_argument("closed_set must list vertices in order position");
  IntMatrix a;
  for (const auto& row : j.at("rows")) {
    std::vector<Int> r;
    for (const auto& e : row) r.emplace_back(e.get<long long>());
    a.push_back(std::move(r));
  }
  return StabMatrix::checked(std::move(p), std::move(a));
}

json matrix_to_json(const StabMatrix& a) {
  const Context& ctx = a.pattern().context();
  json names = json::array();
  for (int v : a.pattern().vertices()) names.push_back(ctx.graph().name(v));
  json rows = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < a.dim(); ++j2) row.push_back(a.at(i, j2).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return json{{"closed_set", names}, {"rows", rows}};
}

GeneratorAtom atom_from_json(const Context& ctx, const json& j) {
  if (j.contains("flip")) return SignFlip{ctx.graph().vertex(j.at("flip").get<std::string>())};
  if (j.contains("tr")) {
    const auto& pair = j.at("tr");
    return Transvection{ctx.graph().vertex(pair.at(0).get<std::string>()),
                        ctx.graph().vertex(pair.at(1).get<std::string>()),
                        j.value("e", 1LL)};
  }
  if (j.contains("class_move")) {
    const auto& cm = j.at("class_move");
    VertexSet cls = vertex_set_from_json(ctx.graph(), cm.at("class"));
    IntMatrix m;
    for (const auto& row : cm.at("rows")) {
      std::vector<Int> r;
      for (const auto& e : row) r.emplace_back(e.get<long long>());
      m.push_back(std::move(r));
    }
    return ClassMove{cls, std::move(m)};
  }
  throw std::invalid_argument("unrecognized generator atom: " + j.dump());
}

json atom_to_json(const Context& ctx, const GeneratorAtom& atom) {
  const Graph& g = ctx.graph();
  if (const auto* f = std::get_if<SignFlip>(&atom)) return json{{"flip", g.name(f->vertex)}};
  if (const auto* c = std::get_if<ClassMove>(&atom)) {
    json rows = json::array();
    for (const auto& row : c->mat) {
      json r = json::array();
      for (const Int& e : row) r.push_back(e.convert_to<long long>());
      rows.push_back(std::move(r));
    }
    json cls = json::array();
    for (int v : ctx.order().sorted(c->cls)) cls.push_back(g.name(v));
    return json{{"class_move", {{"class", cls}, {"rows", rows}}}};
  }
  const auto& t = std::get<Transvection>(atom);
  return json{{"tr", {g.name(t.x), g.name(t.y)}}, {"e", t.e}};
}

GeneratorWord word_atoms_from_json(const Context& ctx, const json& j) {
  GeneratorWord out;
  for (const auto& a : j) out.push_back(atom_from_json(ctx, a));
  return out;
}

json word_atoms_to_json(const Context& ctx, const GeneratorWord& word) {
  json out = json::array();
  for (const auto& a : word) out.push_back(atom_to_json(ctx, a));
  return out;
}

Automorphism composition_from_json(const Context& ctx, const json& j) {
  Automorphism out = Automorphism::identity(ctx);
  for (const auto& item : j) {
    if (item.contains("conj")) {
      const auto& c = item.at("conj");
      ElemConjSpec spec{ctx.graph().vertex(c.at("x").get<std::string>()),
                        vertex_set_from_json(ctx.graph(), c.at("component")), c.value("dir", 1)};
      out = out.then(elementary_conj(ctx, spec));
    } else if (item.contains("inner")) {
      out = out.then(inner(parse_word(ctx, item.at("inner").get<std::string>())));
    } else {
      out = out.then(atom_to_automorphism(ctx, atom_from_json(ctx, item)));
    }
  }
  return out;
}

}  // namespace raag

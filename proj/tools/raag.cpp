// Command-line front end: lattice/order/generator inspection, matrix
// decomposition, word arithmetic, factorization, and the verification
// harness.  Exit status 0 on success, 1 when a verification check fails,
// 2 on input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "raag/io.hpp"
#include "raag/verify.hpp"

using namespace raag;

namespace {

struct Options {
  std::string graph_path;
  std::string tie_break;
  std::string format = "text";
  std::string out;
  std::string matrix_path;
  std::string atoms_path;
  std::string composition_path;
  std::string word;
  std::string set;
  std::uint64_t seed = 1;
  int bound = 5;
  int max_vertices = 5;
  bool exhaustive = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw std::invalid_argument("cannot write " + opt.out);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

Graph load_graph(const Options& opt) {
  if (opt.graph_path.empty()) throw std::invalid_argument("--graph is required");
  return graph_from_json(read_json_file(opt.graph_path));
}

std::vector<int> parse_tie_break(const Graph& g, const std::string& spec) {
  if (spec.empty()) return {};
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) out.push_back(g.vertex(name));
  return out;
}

Context make_context(const Options& opt, const Graph& g) {
  return Context(g, parse_tie_break(g, opt.tie_break));
}

std::string set_names(const Graph& g, VertexSet y, const TotalOrder* ord = nullptr) {
  std::string s;
  std::vector<int> vs = ord ? ord->sorted(y) : y.members();
  for (int v : vs) {
    if (!s.empty()) s += " ";
    s += g.name(v);
  }
  return s;
}

int cmd_lattice(const Options& opt) {
  Graph g = load_graph(opt);
  Context ctx = make_context(opt, g);
  const ClosureLattice& lat = ctx.lattice();
  if (opt.format == "dot") {
    emit(opt, hasse_to_dot(lat));
    return 0;
  }
  if (opt.format == "json") {
    json sets = json::array();
    for (VertexSet y : lat.closed_sets()) sets.push_back(vertex_set_to_json(g, y));
    json per_vertex = json::object();
    for (int v = 0; v < g.size(); ++v)
      per_vertex[g.name(v)] = {{"class", vertex_set_to_json(g, lat.equiv_class(v))},
                               {"height", lat.height(v)}};
    json lmax = json::array();
    for (VertexSet y : lat.l_max_sets()) lmax.push_back(vertex_set_to_json(g, y));
    emit(opt, json{{"closed_sets", sets}, {"vertices", per_vertex}, {"maximal_closures", lmax}}
                  .dump(2));
    return 0;
  }
  std::ostringstream os;
  os << lat.closed_sets().size() << " closed sets:\n";
  for (VertexSet y : lat.closed_sets()) os << "  {" << set_names(g, y) << "}\n";
  os << "maximal closures:\n";
  for (VertexSet y : lat.l_max_sets()) os << "  {" << set_names(g, y) << "}\n";
  for (int v = 0; v < g.size(); ++v)
    os << g.name(v) << ": class {" << set_names(g, lat.equiv_class(v)) << "}, height "
       << lat.height(v) << "\n";
  emit(opt, os.str());
  return 0;
}

int cmd_order(const Options& opt) {
  Graph g = load_graph(opt);
  Context ctx = make_context(opt, g);
  if (opt.format == "json") {
    json seq = json::array();
    for (int v : ctx.order().sequence()) seq.push_back(g.name(v));
    json heights = json::object();
    for (int v = 0; v < g.size(); ++v) heights[g.name(v)] = ctx.lattice().height(v);
    emit(opt, json{{"sequence", seq}, {"heights", heights}}.dump(2));
    return 0;
  }
  emit(opt, set_names(g, g.all(), &ctx.order()));
  return 0;
}

int cmd_generators(const Options& opt) {
  Graph g = load_graph(opt);
  Context ctx = make_context(opt, g);
  GeneratorInventory inv = enumerate_generators(ctx);
  if (opt.format == "json") {
    json flips = json::array();
    for (int v : inv.sign_flips) flips.push_back(g.name(v));
    json classes = json::array();
    for (VertexSet cls : inv.move_classes) classes.push_back(vertex_set_to_json(g, cls));
    json trs = json::array();
    for (auto [x, y] : inv.transvections) trs.push_back({g.name(x), g.name(y)});
    emit(opt, json{{"sign_flips", flips}, {"class_moves", classes}, {"transvections", trs}}
                  .dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "sign flips: " << set_names(g, g.all()) << "\n";
  os << "class moves:";
  for (VertexSet cls : inv.move_classes) os << " {" << set_names(g, cls) << "}";
  os << "\ntransvections:";
  for (auto [x, y] : inv.transvections) os << " (" << g.name(x) << "," << g.name(y) << ")";
  os << "\n";
  emit(opt, os.str());
  return 0;
}

int cmd_pattern(const Options& opt) {
  Graph g = load_graph(opt);
  Context ctx = make_context(opt, g);
  VertexSet y = g.all();
  if (!opt.set.empty()) {
    y = VertexSet();
    std::stringstream ss(opt.set);
    std::string name;
    while (std::getline(ss, name, ',')) y.add(g.vertex(name));
  }
  StabPattern p = StabPattern::of(ctx, y);
  if (opt.format == "json") {
    json verts = json::array();
    for (int v : p.vertices()) verts.push_back(g.name(v));
    json blocks = json::array();
    for (auto [lo, hi] : p.blocks()) blocks.push_back({lo, hi});
    json allowed = json::array();
    for (int i = 0; i < p.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < p.dim(); ++j) row.push_back(p.allows(i, j));
      allowed.push_back(row);
    }
    emit(opt, json{{"closed_set", verts}, {"blocks", blocks}, {"allowed", allowed}}.dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "rows/columns:";
  for (int v : p.vertices()) os << " " << g.name(v);
  os << "\n";
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = 0; j < p.dim(); ++j)
      os << (p.in_diag_block(i, j) ? 'D' : (p.allows(i, j) ? '*' : '.'));
    os << "\n";
  }
  emit(opt, os.str());
  return 0;
}

int cmd_decompose(const Options& opt) {
  Graph g = load_graph(opt);
  Context ctx = make_context(opt, g);
  if (opt.matrix_path.empty()) throw std::invalid_argument("--matrix is required");
  StabMatrix a = matrix_from_json(ctx, read_json_file(opt.matrix_path));
  emit(opt, word_atoms_to_json(ctx, decompose(a)).dump(2));
  return 0;
}

int cmd_word(const Options& opt) {
  Graph g = load_graph(opt);
  Context ctx = make_context(opt, g);
  PCWord u = parse_word(ctx, opt.word);
  auto [conj, core] = u.cyclic_reduce();
  json blocks = json::array();
  for (const PCWord& b : core.block_decomposition()) blocks.push_back(format_word(b));
  if (opt.format == "json") {
    emit(opt, json{{"normal_form", format_word(u)},
                   {"length", u.length()},
                   {"support", vertex_set_to_json(g, u.alpha())},
                   {"conjugator", format_word(conj)},
                   {"core", format_word(core)},
                   {"core_blocks", blocks}}
                  .dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "normal form: " << format_word(u) << "\n";
  os << "length: " << u.length() << ", support: {" << set_names(g, u.alpha()) << "}\n";
  os << "cyclic: conjugator " << format_word(conj) << ", core " << format_word(core) << "\n";
  os << "core blocks:";
  for (const auto& b : blocks) os << " [" << b.get<std::string>() << "]";
  os << "\n";
  emit(opt, os.str());
  return 0;
}

int cmd_apply(const Options& opt) {
  Graph g = load_graph(opt);
  Context ctx = make_context(opt, g);
  if (opt.atoms_path.empty()) throw std::invalid_argument("--atoms is required");
  AutMap phi = word_to_automap(ctx, word_atoms_from_json(ctx, read_json_file(opt.atoms_path)));
  PCWord image = phi.apply(parse_word(ctx, opt.word));
  if (opt.format == "json") {
    emit(opt, json{{"image", format_word(image)}}.dump(2));
    return 0;
  }
  emit(opt, format_word(image));
  return 0;
}

int cmd_factor(const Options& opt) {
  Graph g = load_graph(opt);
  Context ctx = make_context(opt, g);
  if (opt.composition_path.empty()) throw std::invalid_argument("--composition is required");
  Automorphism theta = composition_from_json(ctx, read_json_file(opt.composition_path));
  SemidirectFactorization fact = factor_semidirect(theta);
  bool check = is_conjugating(fact.tau) && stabilizes_L(fact.phi) &&
               fact.tau.then(fact.phi) == theta.map();
  json tau = json::object();
  for (int v = 0; v < g.size(); ++v) tau[g.name(v)] = format_word(fact.tau.image(v));
  json out = {{"tau", tau},
              {"phi", word_atoms_to_json(ctx, decompose(matrix_of(fact.phi)))},
              {"check", check ? "pass" : "fail"}};
  emit(opt, out.dump(2));
  return check ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  CheckOptions copt;
  copt.max_vertices = opt.max_vertices;
  copt.exhaustive = opt.exhaustive || opt.graph_path.empty();
  copt.seed = opt.seed;
  copt.entry_bound = opt.bound;
  if (!opt.graph_path.empty()) copt.graphs.push_back(load_graph(opt));
  std::ostringstream os;
  os << "seed " << copt.seed << "\n";
  bool all_ok = true;
  for (const CheckResult& r : run_verification(copt)) {
    os << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  cases=" << r.cases
       << " failures=" << r.failures << "\n";
    if (!r.passed()) {
      os << "      first: " << r.first_failure << "\n";
      all_ok = false;
    }
  }
  emit(opt, os.str());
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational toolkit for partially commutative groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool graph_required = true) {
    sub->add_option("--graph", opt.graph_path, "graph JSON file")->required(graph_required);
    sub->add_option("--tie-break", opt.tie_break, "comma-separated vertex names");
    sub->add_option("--format", opt.format, "json|text|dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--out", opt.out, "output path (default stdout)");
  };

  auto* lattice = app.add_subcommand("lattice", "closed sets, classes, heights");
  add_common(lattice);
  auto* order = app.add_subcommand("order", "total order on the vertices");
  add_common(order);
  auto* generators = app.add_subcommand("generators", "stabiliser generator inventory");
  add_common(generators);
  auto* pattern = app.add_subcommand("pattern", "matrix support pattern of a closed set");
  add_common(pattern);
  pattern->add_option("--set", opt.set, "closed set, comma-separated (default all)");
  auto* decomp = app.add_subcommand("decompose", "factor a matrix into generators");
  add_common(decomp);
  decomp->add_option("--matrix", opt.matrix_path, "matrix JSON file")->required();
  auto* word = app.add_subcommand("word", "normal form and cyclic data of a word");
  add_common(word);
  word->add_option("--word", opt.word, "word literal")->required();
  auto* apply = app.add_subcommand("apply", "apply a generator word to a group element");
  add_common(apply);
  apply->add_option("--atoms", opt.atoms_path, "generator word JSON file")->required();
  apply->add_option("--word", opt.word, "word literal")->required();
  auto* factor = app.add_subcommand("factor", "split into conjugating and stabilising parts");
  add_common(factor);
  factor->add_option("--composition", opt.composition_path, "composition JSON file")->required();
  auto* verify = app.add_subcommand("verify", "run the oracle/property suite");
  add_common(verify, false);
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--bound", opt.bound, "matrix entry bound");
  verify->add_option("--max-vertices", opt.max_vertices, "exhaustive corpus bound");
  verify->add_flag("--exhaustive", opt.exhaustive, "enumerate all graphs up to the bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lattice->parsed()) return cmd_lattice(opt);
    if (order->parsed()) return cmd_order(opt);
    if (generators->parsed()) return cmd_generators(opt);
    if (pattern->parsed()) return cmd_pattern(opt);
    if (decomp->parsed()) return cmd_decompose(opt);
    if (word->parsed()) return cmd_word(opt);
    if (apply->parsed()) return cmd_apply(opt);
    if (factor->parsed()) return cmd_factor(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "raag/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "raag/io.hpp"

namespace raag {

void CheckResult::record(bool ok, const std::string& witness) {
  ++cases;
  if (!ok) {
    ++failures;
    if (first_failure.empty()) first_failure = witness;
  }
}

namespace {

std::vector<std::string> letter_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "graph(n=" << g.size() << "; edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ",";
    os << g.name(u) << g.name(v);
    first = false;
  }
  return os.str() + ")";
}

std::string set_str(const Graph& g, VertexSet y) {
  std::string s = "{";
  bool first = true;
  for (int v : y.members()) {
    if (!first) s += ",";
    s += g.name(v);
    first = false;
  }
  return s + "}";
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
  return Graph(letter_names(n), edges);
}

/// Full corpus for the cheap structural checks: every labeled graph up to
/// the exhaustive bound, plus a seeded random batch of larger ones.
std::vector<Graph> structural_corpus(const CheckOptions& opt) {
  if (!opt.graphs.empty()) return opt.graphs;
  std::vector<Graph> out;
  if (opt.exhaustive)
    for (const Graph& g : exhaustive_graphs(opt.max_vertices)) out.push_back(g);
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < opt.random_graphs; ++i) {
    int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(opt.random_max_vertices));
    out.push_back(random_graph(n, rng()));
  }
  return out;
}

/// Corpus for the randomized algebra checks.
std::vector<Graph> algebra_corpus(const CheckOptions& opt) {
  return opt.graphs.empty() ? fixture_graphs() : opt.graphs;
}

/// All-pairs distances, kUnreachable off-component.
std::vector<std::vector<int>> distance_table(const Graph& g) {
  std::vector<std::vector<int>> d(g.size(), std::vector<int>(g.size()));
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v) d[u][v] = g.distance(u, v);
  return d;
}

}  // namespace

std::vector<Graph> exhaustive_graphs(int max_vertices) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
      out.push_back(graph_from_mask(n, mask));
  }
  return out;
}

Graph random_graph(int vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double p = 0.2 + 0.6 * unit(rng);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j)
      if (unit(rng) < p) edges.emplace_back(i, j);
  return Graph(letter_names(vertices), edges);
}

std::vector<Graph> fixture_graphs() {
  std::vector<Graph> out;
  auto add = [&](int n, std::vector<std::pair<int, int>> edges) {
    out.push_back(Graph(letter_names(n), edges));
  };
  add(3, {{0, 1}, {1, 2}});                          // path
  add(3, {{0, 1}, {1, 2}, {0, 2}});                  // triangle
  add(3, {});                                        // edgeless
  add(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});          // path
  add(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});  // cycle
  add(4, {{0, 1}, {0, 2}, {0, 3}});                  // star
  // "book": a,b are adjacent twins, giving an equivalence class of size 2
  add(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  out.push_back(random_graph(6, 7));
  out.push_back(random_graph(7, 11));
  return out;
}

// ---- closure operator ---------------------------------------------------

CheckResult check_closure_axioms(const CheckOptions& opt) {
  CheckResult res{"closure axioms"};
  for (const Graph& g : structural_corpus(opt)) {
    int n = g.size();
    auto dist = distance_table(g);
    std::uint64_t all = VertexSet::full(n).bits;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
      VertexSet y(mask);
      std::string where = describe(g) + " Y=" + set_str(g, y);
      // Reference complement straight from the distance definition.
      VertexSet oracle = g.all();
      for (int u = 0; u < n; ++u)
        for (int v : y.members())
          if (dist[u][v] < 0 || dist[u][v] > 1) {
            oracle.remove(u);
            break;
          }
      VertexSet perp = g.orth(y);
      res.record(perp == oracle, where + ": orth disagrees with the distance definition");
      VertexSet cl = g.closure(y);
      res.record(y.subset_of(cl), where + ": Y not contained in cl(Y)");
      res.record(g.closure(cl) == cl, where + ": closure not idempotent");
      res.record(g.orth(cl) == perp, where + ": triple-complement law fails");
      // Monotone closure / antitone complement over all subsets of Y.
      for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
        VertexSet z(sub);
        res.record(g.closure(z).subset_of(cl),
                   where + ": closure not monotone at Z=" + set_str(g, z));
        res.record(perp.subset_of(g.orth(z)),
                   where + ": complement not antitone at Z=" + set_str(g, z));
        if (sub == 0) break;
      }
      if (y.count() == 1)
        res.record(g.is_simplex(cl), where + ": singleton closure is not a simplex");
    }
  }
  return res;
}

// ---- lattice of closed sets ----------------------------------------------

CheckResult check_lattice_laws(const CheckOptions& opt) {
  CheckResult res{"lattice laws"};
  for (const Graph& g : structural_corpus(opt)) {
    Context ctx(g);
    const ClosureLattice& lat = ctx.lattice();
    std::string where = describe(g);

    // Oracle: the closed sets are exactly the complements of arbitrary sets.
    std::set<std::uint64_t> oracle;
    std::uint64_t all = g.all().bits;
    for (std::uint64_t mask = 0; mask <= all; ++mask) oracle.insert(g.orth(VertexSet(mask)).bits);
    std::set<std::uint64_t> got;
    for (VertexSet y : lat.closed_sets()) got.insert(y.bits);
    res.record(oracle == got, where + ": enumerated lattice misses the brute-force one");

    const auto& closed = lat.closed_sets();
    for (VertexSet a : closed)
      for (VertexSet b : closed) {
        res.record(lat.is_closed(lat.meet(a, b)), where + ": meet of " + set_str(g, a) + " and " +
                                                      set_str(g, b) + " is not closed");
        res.record(lat.is_closed(lat.join(a, b)), where + ": join of " + set_str(g, a) + " and " +
                                                      set_str(g, b) + " is not closed");
      }

    for (VertexSet y : closed) {
      VertexSet uni;
      for (int v : y.members()) uni |= lat.cl_of(v);
      res.record(uni == y,
                 where + ": closed set " + set_str(g, y) + " is not the union of vertex closures");
      for (int v : y.members())
        res.record(lat.equiv_class(v).subset_of(y),
                   where + ": class of " + g.name(v) + " leaks out of " + set_str(g, y));
    }

    for (int x = 0; x < g.size(); ++x) {
      std::string wx = where + " x=" + g.name(x);
      VertexSet cls;
      for (int v = 0; v < g.size(); ++v)
        if (g.orth(VertexSet::single(v)) == g.orth(VertexSet::single(x))) cls.add(v);
      res.record(lat.equiv_class(x) == cls, wx + ": class disagrees with equal complements");
      res.record(g.is_simplex(cls), wx + ": class is not a simplex");
      res.record(lat.n1().contains(x) == (cls.count() == 1) &&
                     lat.n2().contains(x) == (cls.count() >= 2),
                 wx + ": N1/N2 split is wrong");

      // Boundary: the class is what remains of cl(x) after all strictly
      // smaller vertex closures are removed.
      VertexSet boundary = lat.cl_of(x);
      for (int v = 0; v < g.size(); ++v)
        if (lat.l_less(v, x)) boundary = boundary - lat.cl_of(v);
      res.record(boundary == cls, wx + ": boundary of cl(x) is not the class");

      for (int y = 0; y < g.size(); ++y) {
        bool strict = lat.cl_of(x).subset_of(lat.cl_of(y)) && lat.cl_of(x) != lat.cl_of(y);
        res.record(lat.l_less(x, y) == strict, wx + ": order comparison wrong vs " + g.name(y));
        if (lat.l_less(x, y))
          res.record(lat.height(x) < lat.height(y), wx + ": height not monotone vs " + g.name(y));
      }
    }
  }
  return res;
}

// ---- total order ----------------------------------------------------------

namespace {

void order_properties(CheckResult& res, const Context& ctx, const TotalOrder& ord,
                      const std::string& where) {
  const ClosureLattice& lat = ctx.lattice();
  int n = ctx.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (lat.l_less(x, y))
        res.record(ord.precedes(y, x), where + ": smaller vertex " + ctx.graph().name(x) +
                                           " does not come after " + ctx.graph().name(y));
    std::vector<int> members = lat.equiv_class(x).members();
    int lo = n, hi = -1;
    for (int v : members) {
      lo = std::min(lo, ord.position(v));
      hi = std::max(hi, ord.position(v));
    }
    res.record(hi - lo + 1 == static_cast<int>(members.size()),
               where + ": class of " + ctx.graph().name(x) + " is not an interval");
  }
}

}  // namespace

CheckResult check_total_order(const CheckOptions& opt) {
  CheckResult res{"total order"};
  for (const Graph& g : structural_corpus(opt)) {
    Context ctx(g);
    std::string where = describe(g);
    order_properties(res, ctx, ctx.order(), where);

    std::vector<int> identity(g.size());
    for (int i = 0; i < g.size(); ++i) identity[i] = i;
    TotalOrder again = TotalOrder::build(ctx.lattice(), identity);
    res.record(again.sequence() == ctx.order().sequence(),
               where + ": rebuilding the order changed the result");

    std::vector<int> reversed(identity.rbegin(), identity.rend());
    TotalOrder alt = TotalOrder::build(ctx.lattice(), reversed);
    order_properties(res, ctx, alt, where + " (reversed tie-break)");
  }
  return res;
}

// ---- stabiliser matrix algebra --------------------------------------------

CheckResult check_matrix_algebra(const CheckOptions& opt) {
  CheckResult res{"stabiliser matrix algebra"};
  for (const Graph& g : algebra_corpus(opt)) {
    Context ctx(g);
    const auto& closed = ctx.lattice().closed_sets();
    std::string where = describe(g);
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull ^ g.edges().size());
    long long done = 0;
    for (size_t yi = 0; done < opt.matrix_pairs; yi = (yi + 1) % closed.size(), ++done) {
      VertexSet y = closed[yi];
      StabPattern p = StabPattern::of(ctx, y);
      if (p.dim() == 0) continue;
      StabMatrix a = sample_member(p, opt.entry_bound, rng());
      StabMatrix b = sample_member(p, opt.entry_bound, rng());
      std::string wy = where + " Y=" + set_str(g, y);

      IntMatrix prod = mat_mul(a.entries(), b.entries());
      res.record(StabMatrix::is_member(prod, p), wy + ": product leaves the pattern");
      IntMatrix inv = unimodular_inverse(a.entries());
      res.record(StabMatrix::is_member(inv, p), wy + ": inverse leaves the pattern");
      res.record(mat_mul(a.entries(), inv) == identity_matrix(p.dim()),
                 wy + ": inverse does not cancel");
      Int det = determinant(a.entries());
      res.record(det == 1 || det == -1, wy + ": determinant is not a unit");

      auto [u, d] = a.split_semidirect();
      res.record(u.is_block_unipotent() && d.is_block_diagonal() &&
                     mat_mul(u.entries(), d.entries()) == a.entries(),
                 wy + ": unipotent/diagonal split fails");
      // The diagonal factor is forced, so the split is unique.
      bool diag_forced = true;
      for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j)
          if (p.in_diag_block(i, j) && d.at(i, j) != a.at(i, j)) diag_forced = false;
      res.record(diag_forced, wy + ": diagonal factor differs from the diagonal part");

      // Minor is a homomorphism to every closed subset, and the embedding
      // into a closed superset is a section of it.
      StabMatrix ab = StabMatrix::checked(p, prod);
      for (VertexSet z : closed) {
        if (!z.subset_of(y) || z == y) continue;
        StabMatrix ma = a.minor_to(z);
        StabMatrix mb = b.minor_to(z);
        res.record(mat_mul(ma.entries(), mb.entries()) == ab.minor_to(z).entries(),
                   wy + ": minor to " + set_str(g, z) + " is not a homomorphism");
        res.record(ma.embed_into(y).minor_to(z) == ma,
                   wy + ": embedding then restricting loses " + set_str(g, z));
        res.record((ma.embed_into(y) * mb.embed_into(y)).entries() ==
                       (ma * mb).embed_into(y).entries(),
                   wy + ": embedding into " + set_str(g, y) + " is not a homomorphism");
      }
    }
  }
  return res;
}

// ---- map <-> matrix dictionary --------------------------------------------

namespace {

GeneratorAtom random_atom(const Context& ctx, const GeneratorInventory& inv, std::mt19937_64& rng,
                          int bound) {
  // Weighted toward transvections, the only unbounded family.
  while (true) {
    switch (rng() % 4) {
      case 0:
        if (!inv.sign_flips.empty()) return SignFlip{inv.sign_flips[rng() % inv.sign_flips.size()]};
        break;
      case 1:
        if (!inv.move_classes.empty()) {
          VertexSet cls = inv.move_classes[rng() % inv.move_classes.size()];
          int k = cls.count();
          // A few elementary in-class moves multiplied together.
          IntMatrix m = identity_matrix(k);
          for (int step = 0; step < 3; ++step) {
            int i = static_cast<int>(rng() % k), j = static_cast<int>(rng() % k);
            if (i == j) continue;
            long long e = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
            for (int c = 0; c < k; ++c) m[i][c] += Int(e) * m[j][c];
          }
          return ClassMove{cls, std::move(m)};
        }
        break;
      default:
        if (!inv.transvections.empty()) {
          auto [x, y] = inv.transvections[rng() % inv.transvections.size()];
          long long e = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
          if (e == 0) e = 1;
          return Transvection{x, y, e};
        }
        break;
    }
    if (inv.sign_flips.empty() && inv.move_classes.empty() && inv.transvections.empty())
      throw std::logic_error("graph with no generators at all");
  }
}

GeneratorWord random_word(const Context& ctx, const GeneratorInventory& inv, std::mt19937_64& rng,
                          int max_len, int bound) {
  GeneratorWord w;
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
  for (int i = 0; i < len; ++i) w.push_back(random_atom(ctx, inv, rng, bound));
  return w;
}

}  // namespace

CheckResult check_pi_homomorphism(const CheckOptions& opt) {
  CheckResult res{"matrix representation"};
  for (const Graph& g : algebra_corpus(opt)) {
    Context ctx(g);
    GeneratorInventory inv = enumerate_generators(ctx);
    StabPattern full = StabPattern::of(ctx, g.all());
    std::string where = describe(g);
    std::mt19937_64 rng(opt.seed ^ 0x6a09e667f3bcc909ull ^ g.edges().size());

    for (int i = 0; i < opt.generator_words; ++i) {
      GeneratorWord w = random_word(ctx, inv, rng, 12, 2);
      AutMap phi = word_to_automap(ctx, w);
      res.record(stabilizes_L(phi), where + ": generator word is not a stabiliser");
      StabMatrix m = matrix_of(phi);
      IntMatrix prod = identity_matrix(full.dim());
      for (const GeneratorAtom& atom : w) prod = mat_mul(prod, atom_to_matrix(ctx, atom).entries());
      res.record(m.entries() == prod,
                 where + ": matrix of a word differs from the product of atom matrices");
      res.record(automap_of(m) == phi, where + ": matrix does not determine the map");
    }

    for (int i = 0; i < opt.matrix_samples; ++i) {
      StabMatrix a = sample_member(full, opt.entry_bound, rng());
      GeneratorWord w = decompose(a);
      IntMatrix prod = identity_matrix(full.dim());
      for (const GeneratorAtom& atom : w) prod = mat_mul(prod, atom_to_matrix(ctx, atom).entries());
      res.record(prod == a.entries(), where + ": decomposition does not multiply back");
      res.record(matrix_of(word_to_automap(ctx, w)).entries() == a.entries(),
                 where + ": decomposition acts wrongly on the group");
    }
  }
  return res;
}

// ---- restriction diagram ---------------------------------------------------

CheckResult check_restriction_diagram(const CheckOptions& opt) {
  CheckResult res{"restriction diagram"};
  for (const Graph& g : algebra_corpus(opt)) {
    Context ctx(g);
    StabPattern full = StabPattern::of(ctx, g.all());
    const auto& closed = ctx.lattice().closed_sets();
    std::string where = describe(g);
    std::mt19937_64 rng(opt.seed ^ 0xbb67ae8584caa73bull ^ g.edges().size());
    int samples = std::max(1, opt.matrix_samples / 5);
    for (int i = 0; i < samples; ++i) {
      StabMatrix a = sample_member(full, opt.entry_bound, rng());
      AutMap phi = automap_of(a);
      for (VertexSet y : closed) {
        if (y.empty()) continue;
        AutMap ry = restrict_to(phi, y);
        res.record(matrix_of(ry) == a.minor_to(y),
                   where + ": restricting to " + set_str(g, y) +
                       " does not match the matrix minor");
        for (VertexSet z : closed) {
          if (z.empty() || !z.subset_of(y) || z == y) continue;
          res.record(restrict_to(ry, z) == restrict_to(phi, z),
                     where + ": restriction to " + set_str(g, z) + " does not factor through " +
                         set_str(g, y));
        }
      }
    }
  }
  return res;
}

// ---- elementary conjugation witnesses --------------------------------------

CheckResult check_conj_witnesses(const CheckOptions& opt) {
  CheckResult res{"elementary conjugation witnesses"};
  std::vector<Graph> corpus =
      opt.graphs.empty() ? exhaustive_graphs(opt.conj_max_vertices) : opt.graphs;
  for (const Graph& g : corpus) {
    Context ctx(g);
    std::string where = describe(g);
    for (ElemConjSpec spec : enumerate_elementary_conj(ctx)) {
      for (int dir : {1, -1}) {
        spec.direction = dir;
        Automorphism theta = elementary_conj(ctx, spec);
        for (VertexSet y : ctx.lattice().closed_sets()) {
          auto witness = conj_stab_witness(theta, y);
          std::string wspec = where + " x=" + g.name(spec.x) + " C=" +
                              set_str(g, spec.component) + " dir=" + std::to_string(dir) +
                              " Y=" + set_str(g, y);
          res.record(witness.has_value(), wspec + ": no conjugation witness found");
          if (witness)
            res.record(witness->length() <= 1 &&
                           (witness->is_identity() || witness->letters()[0].vertex == spec.x),
                       wspec + ": witness " + format_word(*witness) +
                           " is not trivial or a power of x");
        }
      }
    }
  }
  return res;
}

// ---- semidirect factorization ----------------------------------------------

CheckResult check_factorization(const CheckOptions& opt) {
  CheckResult res{"semidirect factorization"};
  for (const Graph& g : algebra_corpus(opt)) {
    if (g.size() > 6) continue;  // witness searches dominate beyond this
    Context ctx(g);
    GeneratorInventory inv = enumerate_generators(ctx);
    auto conj_specs = enumerate_elementary_conj(ctx);
    std::string where = describe(g);
    std::mt19937_64 rng(opt.seed ^ 0x3c6ef372fe94f82bull ^ g.edges().size());

    for (int i = 0; i < opt.factor_samples; ++i) {
      Automorphism theta = Automorphism::identity(ctx);
      bool pure_stab = true;
      int len = 1 + static_cast<int>(rng() % 6u);
      for (int k = 0; k < len; ++k) {
        switch (rng() % 4) {
          case 0:
            if (!conj_specs.empty()) {
              ElemConjSpec spec = conj_specs[rng() % conj_specs.size()];
              spec.direction = (rng() & 1) ? 1 : -1;
              theta = theta.then(elementary_conj(ctx, spec));
              pure_stab = false;
              continue;
            }
            break;
          case 1: {
            std::vector<Letter> raw;
            int wl = 1 + static_cast<int>(rng() % 3u);
            for (int t = 0; t < wl; ++t)
              raw.push_back({static_cast<int>(rng() % g.size()), (rng() & 1) ? 1 : -1});
            PCWord conj = PCWord::from_letters(ctx, std::move(raw));
            if (!conj.is_identity()) pure_stab = false;
            theta = theta.then(inner(conj));
            continue;
          }
          default:
            break;
        }
        theta = theta.then(atom_to_automorphism(ctx, random_atom(ctx, inv, rng, 2)));
      }

      std::string wi = where + " sample " + std::to_string(i);
      SemidirectFactorization fact = [&] {
        try {
          return factor_semidirect(theta);
        } catch (const std::exception& e) {
          res.record(false, wi + ": factorization raised: " + e.what());
          return SemidirectFactorization{AutMap::identity(ctx), theta.map()};
        }
      }();
      res.record(is_conjugating(fact.tau), wi + ": conjugating part fails the core test");
      res.record(stabilizes_L(fact.phi), wi + ": stabilising part is not a stabiliser");
      res.record(fact.tau.then(fact.phi) == theta.map(),
                 wi + ": factors do not compose back to the input");
      if (pure_stab)
        res.record(fact.tau == AutMap::identity(ctx),
                   wi + ": stabiliser input acquired a conjugating part");

      // Normality of the conjugating subgroup: theta^{-1} psi theta stays
      // conjugating for a random conjugating atom psi.
      if (!conj_specs.empty()) {
        ElemConjSpec spec = conj_specs[rng() % conj_specs.size()];
        Automorphism psi = elementary_conj(ctx, spec);
        res.record(is_conjugating(theta.inverse().then(psi).then(theta).map()),
                   wi + ": conjugating subgroup is not normal");
      }

      // Uniqueness: a factorization assembled from known parts is recovered
      // exactly.
      if (!conj_specs.empty() && (i % 4) == 0) {
        ElemConjSpec spec = conj_specs[rng() % conj_specs.size()];
        Automorphism tau0 = elementary_conj(ctx, spec);
        Automorphism phi0 =
            atom_to_automorphism(ctx, random_atom(ctx, inv, rng, 2));
        SemidirectFactorization fact2 = [&] {
          try {
            return factor_semidirect(tau0.then(phi0));
          } catch (const std::exception& e) {
            res.record(false, wi + ": assembled factorization raised: " + e.what());
            return SemidirectFactorization{tau0.map(), phi0.map()};
          }
        }();
        res.record(fact2.tau == tau0.map() && fact2.phi == phi0.map(),
                   wi + ": factorization of a known pair is not that pair");
      }
    }
  }
  return res;
}

std::vector<CheckResult> run_verification(const CheckOptions& opt) {
  return {check_closure_axioms(opt),  check_lattice_laws(opt),
          check_total_order(opt),     check_matrix_algebra(opt),
          check_pi_homomorphism(opt), check_restriction_diagram(opt),
          check_conj_witnesses(opt),  check_factorization(opt)};
}

}  // namespace raag

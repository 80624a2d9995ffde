#include "raag/conj.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace raag {

std::vector<ElemConjSpec> enumerate_elementary_conj(const Context& ctx) {
  std::vector<ElemConjSpec> out;
  for (int x = 0; x < ctx.size(); ++x) {
    VertexSet xperp = ctx.graph().orth(VertexSet::single(x));
    for (VertexSet comp : ctx.graph().components_minus(xperp))
      out.push_back(ElemConjSpec{x, comp, 1});
  }
  return out;
}

AutMap elementary_conj_map(const Context& ctx, const ElemConjSpec& spec) {
  if (spec.x < 0 || spec.x >= ctx.size())
    throw std::invalid_argument("elementary conjugation references unknown vertex");
  if (spec.direction != 1 && spec.direction != -1)
    throw std::invalid_argument("elementary conjugation direction must be +1 or -1");
  VertexSet xperp = ctx.graph().orth(VertexSet::single(spec.x));
  auto comps = ctx.graph().components_minus(xperp);
  if (std::find(comps.begin(), comps.end(), spec.component) == comps.end())
    throw std::invalid_argument("not a connected component of the graph minus x^perp");
  PCWord conj = PCWord::generator(ctx, spec.x, spec.direction);
  AutMap id = AutMap::identity(ctx);
  std::vector<PCWord> images;
  for (int v = 0; v < ctx.size(); ++v)
    images.push_back(spec.component.contains(v) ? id.image(v).conjugated_by(conj) : id.image(v));
  return AutMap::from_images(ctx, std::move(images));
}

Automorphism elementary_conj(const Context& ctx, const ElemConjSpec& spec) {
  ElemConjSpec rev = spec;
  rev.direction = -spec.direction;
  return Automorphism(elementary_conj_map(ctx, spec), elementary_conj_map(ctx, rev));
}

AutMap inner_map(const PCWord& w) {
  const Context& ctx = *w.context();
  AutMap id = AutMap::identity(ctx);
  std::vector<PCWord> images;
  for (int v = 0; v < ctx.size(); ++v) images.push_back(id.image(v).conjugated_by(w));
  return AutMap::from_images(ctx, std::move(images));
}

Automorphism inner(const PCWord& w) { return Automorphism(inner_map(w), inner_map(w.inverse())); }

bool is_conjugating(const AutMap& phi) {
  const Context& ctx = phi.context();
  for (int v = 0; v < ctx.size(); ++v)
    if (phi.image(v).cyclic_reduce().core != PCWord::generator(ctx, v)) return false;
  return true;
}

namespace {

// Subwords (contiguous) of the normal form of w, their inverses, and the
// identity; deduplicated and deterministically ordered.
std::vector<PCWord> witness_candidates(const Automorphism& theta, VertexSet y, int max_len) {
  const Context& ctx = theta.context();
  std::set<std::vector<Letter>> seen;
  std::vector<PCWord> out;
  auto consider = [&](const PCWord& w) {
    if (w.length() > max_len) return;
    if (seen.insert(w.letters()).second) out.push_back(w);
  };
  consider(PCWord(&ctx));
  for (int v : y.members()) {
    PCWord d = theta.map().image(v).cyclic_reduce().conjugator;
    const auto& ls = d.letters();
    for (size_t i = 0; i < ls.size(); ++i)
      for (size_t j = i + 1; j <= ls.size(); ++j) {
        PCWord sub = PCWord::from_letters(ctx, {ls.begin() + i, ls.begin() + j});
        consider(sub);
        consider(sub.inverse());
      }
  }
  std::sort(out.begin(), out.end(), [](const PCWord& a, const PCWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters() < b.letters();
  });
  return out;
}

bool verify_witness(const Automorphism& theta, VertexSet y, const PCWord& g) {
  const Context& ctx = theta.context();
  PCWord ginv = g.inverse();
  for (int v : y.members()) {
    // image contained in G(Y)^g
    if (!theta.map().image(v).conjugated_by(ginv).alpha().subset_of(y)) return false;
    // and onto: every generator of G(Y)^g is hit from G(Y)
    PCWord target = PCWord::generator(ctx, v).conjugated_by(g);
    if (!theta.inverse_map().apply(target).alpha().subset_of(y)) return false;
  }
  return true;
}

}  // namespace

std::optional<PCWord> conj_stab_witness(const Automorphism& theta, VertexSet y) {
  if (!theta.context().lattice().is_closed(y))
    throw std::invalid_argument("witness search requires a closed set");
  int max_len = 0;
  for (int v : y.members())
    max_len = std::max(max_len, theta.map().image(v).length());
  for (const PCWord& g : witness_candidates(theta, y, 2 * max_len))
    if (verify_witness(theta, y, g)) return g;
  return std::nullopt;
}

SemidirectFactorization factor_semidirect(const Automorphism& theta) {
  const Context& ctx = theta.context();
  const ClosureLattice& lat = ctx.lattice();

  for (int x = 0; x < ctx.size(); ++x)
    if (!conj_stab_witness(theta, lat.cl_of(x)))
      throw std::domain_error("no conjugation witness for the closure of " + ctx.graph().name(x) +
                              ": not in the conjugate-stabiliser");

  // Stabilising part: the cyclically minimal core of each image, after the
  // conjugator has been normalized so that it carries no G(x^perp) part.
  std::vector<PCWord> cores;
  std::vector<PCWord> conjugators;
  for (int x = 0; x < ctx.size(); ++x) {
    auto [d, core] = theta.map().image(x).cyclic_reduce();
    auto [stripped, g] = d.strip_left_divisors(ctx.graph().orth(VertexSet::single(x)));
    (void)stripped;
    if (!core.alpha().subset_of(lat.cl_of(x)))
      throw std::domain_error("core of the image of " + ctx.graph().name(x) +
                              " leaves the subgroup of its closure");
    if (core.conjugated_by(g) != theta.map().image(x))
      throw std::logic_error("conjugator normalization failed to reproduce the image");
    cores.push_back(core);
    conjugators.push_back(g);
  }

  AutMap phi = AutMap::from_images(ctx, cores);
  if (!stabilizes_L(phi)) throw std::domain_error("stabilising part is not a stabiliser");
  AutMap phi_inv = automap_of(matrix_of(phi).inverse());
  AutMap tau = theta.map().then(phi_inv);
  if (!is_conjugating(tau)) throw std::logic_error("conjugating part failed verification");
  for (int x = 0; x < ctx.size(); ++x)
    if (phi.apply(tau.image(x)) != theta.map().image(x))
      throw std::logic_error("factorization does not compose back to the input");
  return {std::move(tau), std::move(phi)};
}

}  // namespace raag

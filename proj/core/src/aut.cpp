#include "raag/aut.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace raag {

namespace {
constexpr long long kMaxExpandedExponent = 1 << 20;

long long to_ll(const Int& v) {
  if (v > kMaxExpandedExponent || v < -kMaxExpandedExponent)
    throw std::overflow_error("matrix entry too large to expand into a word");
  return v.convert_to<long long>();
}
}  // namespace

AutMap AutMap::identity(const Context& ctx) {
  std::vector<PCWord> images;
  images.reserve(ctx.size());
  for (int v = 0; v < ctx.size(); ++v) images.push_back(PCWord::generator(ctx, v));
  AutMap m;
  m.ctx_ = &ctx;
  m.domain_ = ctx.graph().all();
  m.images_ = std::move(images);
  return m;
}

AutMap AutMap::from_images(const Context& ctx, std::vector<PCWord> images, VertexSet domain) {
  if (domain.empty() && images.size() == static_cast<size_t>(ctx.size()))
    domain = ctx.graph().all();
  if (images.size() != static_cast<size_t>(ctx.size()))
    throw std::invalid_argument("expected one image per vertex of the graph");
  for (int v = 0; v < ctx.size(); ++v) {
    if (images[v].context() != &ctx)
      throw std::invalid_argument("image word belongs to a different ambient graph");
    if (!domain.contains(v)) images[v] = PCWord::generator(ctx, v);
  }
  for (auto [u, v] : ctx.graph().edges()) {
    if (!domain.contains(u) || !domain.contains(v)) continue;
    PCWord comm = images[u] * images[v] * images[u].inverse() * images[v].inverse();
    if (!comm.is_identity())
      throw std::invalid_argument("images of adjacent vertices do not commute");
  }
  AutMap m;
  m.ctx_ = &ctx;
  m.domain_ = domain;
  m.images_ = std::move(images);
  return m;
}

PCWord AutMap::apply(const PCWord& w) const {
  if (w.context() != ctx_) throw std::invalid_argument("word belongs to a different ambient graph");
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const PCWord& img = images_[l.vertex];
    if (l.sign > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        out.push_back({it->vertex, -it->sign});
    }
  }
  return PCWord::from_letters(*ctx_, std::move(out));
}

AutMap AutMap::then(const AutMap& next) const {
  if (ctx_ != next.ctx_) throw std::invalid_argument("composing maps over different graphs");
  std::vector<PCWord> images;
  images.reserve(images_.size());
  for (const PCWord& w : images_) images.push_back(next.apply(w));
  AutMap m;
  m.ctx_ = ctx_;
  m.domain_ = domain_;
  m.images_ = std::move(images);
  return m;
}

Automorphism Automorphism::identity(const Context& ctx) {
  return Automorphism(AutMap::identity(ctx), AutMap::identity(ctx));
}

Automorphism::Automorphism(AutMap fwd, AutMap inv) : fwd_(std::move(fwd)), inv_(std::move(inv)) {
  const Context& ctx = fwd_.context();
  for (int v = 0; v < ctx.size(); ++v) {
    if (inv_.apply(fwd_.image(v)) != PCWord::generator(ctx, v) ||
        fwd_.apply(inv_.image(v)) != PCWord::generator(ctx, v))
      throw std::invalid_argument("maps are not mutually inverse");
  }
}

Automorphism Automorphism::then(const Automorphism& next) const {
  return Automorphism(fwd_.then(next.fwd_), next.inv_.then(inv_));
}

GeneratorInventory enumerate_generators(const Context& ctx) {
  const ClosureLattice& lat = ctx.lattice();
  GeneratorInventory inv;
  for (int v = 0; v < ctx.size(); ++v) inv.sign_flips.push_back(v);
  VertexSet done;
  for (int v : ctx.order().sequence()) {
    if (done.contains(v)) continue;
    VertexSet cls = lat.equiv_class(v);
    done |= cls;
    if (cls.count() >= 2) inv.move_classes.push_back(cls);
  }
  for (int x = 0; x < ctx.size(); ++x)
    for (int y = 0; y < ctx.size(); ++y)
      if (x != y && lat.l_less(y, x)) inv.transvections.emplace_back(x, y);
  return inv;
}

void check_atom(const Context& ctx, const GeneratorAtom& atom) {
  const ClosureLattice& lat = ctx.lattice();
  if (const auto* f = std::get_if<SignFlip>(&atom)) {
    if (f->vertex < 0 || f->vertex >= ctx.size())
      throw std::invalid_argument("sign flip references unknown vertex");
  } else if (const auto* c = std::get_if<ClassMove>(&atom)) {
    if (c->cls.empty() || !c->cls.subset_of(ctx.graph().all()))
      throw std::invalid_argument("class move set not contained in graph");
    if (!(lat.equiv_class(c->cls.first()) == c->cls) || c->cls.count() < 2)
      throw std::invalid_argument("class move requires a whole class of size >= 2");
    const int k = c->cls.count();
    if (static_cast<int>(c->mat.size()) != k)
      throw std::invalid_argument("class move matrix dimension mismatch");
    Int det = determinant(c->mat);
    if (det != 1 && det != -1)
      throw std::invalid_argument("class move matrix is not unimodular");
  } else {
    const auto& t = std::get<Transvection>(atom);
    if (t.x < 0 || t.x >= ctx.size() || t.y < 0 || t.y >= ctx.size() || t.x == t.y)
      throw std::invalid_argument("transvection references bad vertex pair");
    if (!lat.l_less(t.y, t.x))
      throw std::invalid_argument("transvection requires cl(y) strictly below cl(x)");
  }
}

GeneratorAtom atom_inverse(const GeneratorAtom& atom) {
  if (const auto* f = std::get_if<SignFlip>(&atom)) return *f;
  if (const auto* c = std::get_if<ClassMove>(&atom))
    return ClassMove{c->cls, unimodular_inverse(c->mat)};
  const auto& t = std::get<Transvection>(atom);
  return Transvection{t.x, t.y, -t.e};
}

AutMap atom_to_automap(const Context& ctx, const GeneratorAtom& atom) {
  check_atom(ctx, atom);
  AutMap id = AutMap::identity(ctx);
  std::vector<PCWord> images;
  for (int v = 0; v < ctx.size(); ++v) images.push_back(id.image(v));
  if (const auto* f = std::get_if<SignFlip>(&atom)) {
    images[f->vertex] = PCWord::generator(ctx, f->vertex, -1);
  } else if (const auto* c = std::get_if<ClassMove>(&atom)) {
    std::vector<int> vs = ctx.order().sorted(c->cls);
    for (size_t i = 0; i < vs.size(); ++i) {
      std::vector<Letter> w;
      for (size_t j = 0; j < vs.size(); ++j) {
        long long e = to_ll(c->mat[i][j]);
        for (long long k = 0; k < std::abs(e); ++k) w.push_back({vs[j], e > 0 ? 1 : -1});
      }
      images[vs[i]] = PCWord::from_letters(ctx, std::move(w));
    }
  } else {
    const auto& t = std::get<Transvection>(atom);
    std::vector<Letter> w{{t.x, 1}};
    for (long long k = 0; k < std::abs(t.e); ++k) w.push_back({t.y, t.e > 0 ? 1 : -1});
    images[t.x] = PCWord::from_letters(ctx, std::move(w));
  }
  return AutMap::from_images(ctx, std::move(images));
}

StabMatrix atom_to_matrix(const Context& ctx, const GeneratorAtom& atom) {
  check_atom(ctx, atom);
  IntMatrix a = identity_matrix(ctx.size());
  const TotalOrder& ord = ctx.order();
  if (const auto* f = std::get_if<SignFlip>(&atom)) {
    a[ord.position(f->vertex)][ord.position(f->vertex)] = -1;
  } else if (const auto* c = std::get_if<ClassMove>(&atom)) {
    std::vector<int> vs = ord.sorted(c->cls);
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = 0; j < vs.size(); ++j)
        a[ord.position(vs[i])][ord.position(vs[j])] = c->mat[i][j];
  } else {
    const auto& t = std::get<Transvection>(atom);
    a[ord.position(t.x)][ord.position(t.y)] = t.e;
  }
  return StabMatrix::checked(StabPattern::of(ctx, ctx.graph().all()), std::move(a));
}

Automorphism atom_to_automorphism(const Context& ctx, const GeneratorAtom& atom) {
  return Automorphism(atom_to_automap(ctx, atom), atom_to_automap(ctx, atom_inverse(atom)));
}

AutMap word_to_automap(const Context& ctx, const GeneratorWord& word) {
  AutMap m = AutMap::identity(ctx);
  for (const GeneratorAtom& atom : word) m = m.then(atom_to_automap(ctx, atom));
  return m;
}

IntMatrix raw_matrix_of(const AutMap& phi) {
  const Context& ctx = phi.context();
  const ClosureLattice& lat = ctx.lattice();
  std::vector<int> verts = ctx.order().sorted(phi.domain());
  const int r = static_cast<int>(verts.size());
  IntMatrix a(r, std::vector<Int>(r, 0));
  for (int i = 0; i < r; ++i) {
    int x = verts[i];
    const PCWord& img = phi.image(x);
    if (!img.alpha().subset_of(lat.cl_of(x)))
      throw std::domain_error("image of " + ctx.graph().name(x) +
                              " leaves the subgroup of its closure: not a stabiliser");
    std::vector<long long> exps = img.abelian_exponents(lat.cl_of(x));
    for (int j = 0; j < r; ++j) a[i][j] = exps[verts[j]];
  }
  return a;
}

StabMatrix matrix_of(const AutMap& phi) {
  const Context& ctx = phi.context();
  if (!ctx.lattice().is_closed(phi.domain()))
    throw std::domain_error("matrix representation requires a closed domain");
  IntMatrix a = raw_matrix_of(phi);
  StabPattern p = StabPattern::of(ctx, phi.domain());
  if (!StabMatrix::is_member(a, p))
    throw std::domain_error("exponent matrix is not invertible over the integers");
  return StabMatrix::checked(std::move(p), std::move(a));
}

AutMap automap_of(const StabMatrix& a) {
  const Context& ctx = a.pattern().context();
  const std::vector<int>& verts = a.pattern().vertices();
  AutMap id = AutMap::identity(ctx);
  std::vector<PCWord> images;
  for (int v = 0; v < ctx.size(); ++v) images.push_back(id.image(v));
  for (int i = 0; i < a.dim(); ++i) {
    std::vector<Letter> w;
    for (int j = 0; j < a.dim(); ++j) {
      long long e = to_ll(a.at(i, j));
      for (long long k = 0; k < std::abs(e); ++k) w.push_back({verts[j], e > 0 ? 1 : -1});
    }
    images[verts[i]] = PCWord::from_letters(ctx, std::move(w));
  }
  return AutMap::from_images(ctx, std::move(images), a.pattern().set());
}

bool stabilizes_L(const AutMap& phi) {
  IntMatrix a;
  try {
    a = raw_matrix_of(phi);
  } catch (const std::domain_error&) {
    return false;
  }
  Int det = determinant(a);
  return det == 1 || det == -1;
}

GeneratorWord decompose(const StabMatrix& a) {
  const Context& ctx = a.pattern().context();
  if (a.pattern().set() != ctx.graph().all())
    throw std::invalid_argument("decompose expects a matrix over all of X");
  const std::vector<int>& verts = a.pattern().vertices();
  auto [u, d] = a.split_semidirect();

  // Unipotent part: repeatedly clear the bottom-most, then right-most,
  // off-block entry with a transvection; the pivot strictly decreases.
  GeneratorWord unipotent;
  IntMatrix w = u.entries();
  const int n = a.dim();
  for (;;) {
    int r = -1, c = -1;
    for (int i = n - 1; i >= 0 && r < 0; --i)
      for (int j = n - 1; j >= 0; --j)
        if (w[i][j] != 0 && !a.pattern().in_diag_block(i, j)) {
          r = i;
          c = j;
          break;
        }
    if (r < 0) break;
    Int pivot = w[r][c];
    unipotent.push_back(Transvection{verts[r], verts[c], to_ll(pivot)});
    for (int i = 0; i < n; ++i) w[i][c] -= pivot * w[i][r];
  }
  std::reverse(unipotent.begin(), unipotent.end());

  GeneratorWord word = std::move(unipotent);
  for (auto [lo, hi] : a.pattern().blocks()) {
    if (hi - lo == 1) {
      if (d.at(lo, lo) == -1) word.push_back(SignFlip{verts[lo]});
      continue;
    }
    IntMatrix block;
    bool is_id = true;
    for (int i = lo; i < hi; ++i) {
      block.emplace_back(d.entries()[i].begin() + lo, d.entries()[i].begin() + hi);
      for (int j = lo; j < hi; ++j)
        if (d.at(i, j) != (i == j ? 1 : 0)) is_id = false;
    }
    if (is_id) continue;
    VertexSet cls;
    for (int i = lo; i < hi; ++i) cls.add(verts[i]);
    word.push_back(ClassMove{cls, std::move(block)});
  }
  return word;
}

AutMap restrict_to(const AutMap& phi, VertexSet y) {
  const Context& ctx = phi.context();
  if (!ctx.lattice().is_closed(y)) throw std::invalid_argument("restriction target is not closed");
  if (!y.subset_of(phi.domain()))
    throw std::invalid_argument("restriction target not contained in the domain");
  std::vector<PCWord> images;
  AutMap id = AutMap::identity(ctx);
  for (int v = 0; v < ctx.size(); ++v)
    images.push_back(y.contains(v) ? phi.image(v) : id.image(v));
  return AutMap::from_images(ctx, std::move(images), y);
}

}  // namespace raag

#include "raag/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace raag {

void require_same_context(const PCWord& a, const PCWord& b) {
  if (a.context() != b.context())
    throw std::invalid_argument("words belong to different ambient graphs");
}

namespace {

// Free-and-commutation reduction, one letter at a time.  The running word
// stays reduced: a new letter can only cancel against the nearest visible
// occurrence of its own vertex.
void push_reduced(const Graph& g, std::vector<Letter>& out, Letter l) {
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    if (out[i].vertex == l.vertex) {
      if (out[i].sign == -l.sign) {
        out.erase(out.begin() + i);
        return;
      }
      break;
    }
    if (!g.adjacent(out[i].vertex, l.vertex)) break;
  }
  out.push_back(l);
}

// Lexicographically least linearization of the trace: repeatedly emit the
// order-least currently movable letter.
std::vector<Letter> lex_min(const Context& ctx, std::vector<Letter> w) {
  const Graph& g = ctx.graph();
  const TotalOrder& ord = ctx.order();
  std::vector<Letter> out;
  out.reserve(w.size());
  while (!w.empty()) {
    VertexSet blocked;
    int best = -1;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
      int v = w[k].vertex;
      if (!blocked.contains(v)) {
        if (best < 0 || ord.position(v) < ord.position(w[best].vertex)) best = k;
      }
      blocked.add(v);
      blocked |= g.all() - g.neighbors(v);
      if (blocked == g.all()) break;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

}  // namespace

PCWord PCWord::from_letters(const Context& ctx, std::vector<Letter> raw) {
  std::vector<Letter> reduced;
  reduced.reserve(raw.size());
  for (Letter l : raw) {
    if (l.vertex < 0 || l.vertex >= ctx.size())
      throw std::invalid_argument("letter references unknown vertex");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    push_reduced(ctx.graph(), reduced, l);
  }
  PCWord w(&ctx);
  w.letters_ = lex_min(ctx, std::move(reduced));
  return w;
}

PCWord PCWord::generator(const Context& ctx, int vertex, int sign) {
  return from_letters(ctx, {{vertex, sign}});
}

VertexSet PCWord::alpha() const {
  VertexSet out;
  for (Letter l : letters_) out.add(l.vertex);
  return out;
}

PCWord PCWord::operator*(const PCWord& o) const {
  require_same_context(*this, o);
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return from_letters(*ctx_, std::move(cat));
}

PCWord PCWord::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l.sign = -l.sign;
  return from_letters(*ctx_, std::move(rev));
}

PCWord PCWord::conjugated_by(const PCWord& g) const { return g.inverse() * *this * g; }

bool PCWord::has_left_divisor(Letter l) const {
  for (const Letter& m : letters_) {
    if (m.vertex == l.vertex) return m.sign == l.sign;
    if (!ctx_->graph().adjacent(m.vertex, l.vertex)) return false;
  }
  return false;
}

PCWord::Cyclic PCWord::cyclic_reduce() const {
  PCWord core = *this;
  PCWord conj(ctx_);
  for (;;) {
    bool stripped = false;
    // Candidates in order position, positive sign first, for determinism.
    for (int v : ctx_->order().sequence()) {
      for (int s : {1, -1}) {
        Letter l{v, s};
        if (!core.has_left_divisor(l)) continue;
        if (!core.inverse().has_left_divisor(l)) continue;  // l^{-1} divides on the right
        PCWord unit = PCWord::generator(*ctx_, v, s);
        PCWord next = unit.inverse() * core * unit;
        if (next.length() != core.length() - 2) continue;
        core = next;
        conj = unit.inverse() * conj;
        stripped = true;
        break;
      }
      if (stripped) break;
    }
    if (!stripped) break;
  }
  return {conj, core};
}

std::vector<PCWord> PCWord::block_decomposition() const {
  if (!cyclic_reduce().conjugator.is_identity())
    throw std::invalid_argument("block decomposition requires a cyclically minimal word");
  const Graph& g = ctx_->graph();
  // Connected components of the non-commutation graph restricted to the
  // support; letters from distinct components commute.
  std::vector<VertexSet> comps;
  VertexSet rest = alpha();
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.first());
    for (;;) {
      VertexSet next = comp;
      for (int v : comp.members()) next |= (rest - g.neighbors(v)) - VertexSet::single(v) | comp;
      if (next == comp) break;
      comp = next;
    }
    comps.push_back(comp);
    rest = rest - comp;
  }
  std::vector<PCWord> blocks;
  for (VertexSet comp : comps) {
    std::vector<Letter> part;
    for (Letter l : letters_)
      if (comp.contains(l.vertex)) part.push_back(l);
    blocks.push_back(from_letters(*ctx_, std::move(part)));
  }
  return blocks;
}

std::pair<PCWord, PCWord> PCWord::strip_left_divisors(VertexSet y) const {
  std::vector<Letter> prefix;
  PCWord rest = *this;
  for (;;) {
    Letter pick{-1, 0};
    for (int v : ctx_->order().sequence()) {
      if (!y.contains(v)) continue;
      for (int s : {1, -1}) {
        if (rest.has_left_divisor({v, s})) {
          pick = {v, s};
          break;
        }
      }
      if (pick.vertex >= 0) break;
    }
    if (pick.vertex < 0) break;
    prefix.push_back(pick);
    rest = PCWord::generator(*ctx_, pick.vertex, -pick.sign) * rest;
  }
  return {from_letters(*ctx_, std::move(prefix)), rest};
}

std::vector<long long> PCWord::abelian_exponents(VertexSet s) const {
  if (!ctx_->graph().is_simplex(s))
    throw std::invalid_argument("abelian exponents require a simplex");
  if (!alpha().subset_of(s))
    throw std::invalid_argument("word support is not contained in the simplex");
  std::vector<long long> out(ctx_->size(), 0);
  for (Letter l : letters_) out[l.vertex] += l.sign;
  return out;
}

}  // namespace raag

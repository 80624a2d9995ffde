#include "raag/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace raag {

ClosureLattice::ClosureLattice(Graph g) : graph_(std::move(g)) {
  const int n = graph_.size();

  // Intersection-closure of the unit balls, seeded with X (the empty
  // intersection).  Every closed set is an intersection of balls and vice
  // versa, so a worklist over pairwise intersections enumerates L.
  std::set<std::uint64_t> seen;
  seen.insert(graph_.all().bits);
  std::vector<VertexSet> work{graph_.all()};
  while (!work.empty()) {
    VertexSet y = work.back();
    work.pop_back();
    for (int v = 0; v < n; ++v) {
      VertexSet z = y & graph_.ball(v);
      if (seen.insert(z.bits).second) work.push_back(z);
    }
  }
  closed_.reserve(seen.size());
  for (std::uint64_t bits : seen) closed_.push_back(VertexSet(bits));
  std::sort(closed_.begin(), closed_.end(), [](VertexSet a, VertexSet b) {
    return a.count() != b.count() ? a.count() < b.count() : a.bits < b.bits;
  });

  cl_.resize(n);
  class_.resize(n);
  for (int x = 0; x < n; ++x) cl_[x] = graph_.closure(VertexSet::single(x));
  for (int x = 0; x < n; ++x) {
    VertexSet cls;
    VertexSet bx = graph_.ball(x);
    for (int y = 0; y < n; ++y)
      if (graph_.ball(y) == bx) cls.add(y);
    class_[x] = cls;
    if (cls.count() >= 2)
      n2_.add(x);
    else
      n1_.add(x);
  }

  // Stage stratification: stage 0 holds the minimal closures, and a closure
  // enters stage i+1 once all its strict predecessors' closures have
  // appeared.
  height_.assign(n, -1);
  std::set<std::uint64_t> placed;
  int stage = 0;
  std::set<std::uint64_t> all_cls;
  for (int x = 0; x < n; ++x) all_cls.insert(cl_[x].bits);
  while (placed.size() < all_cls.size()) {
    std::vector<int> next;
    for (int x = 0; x < n; ++x) {
      if (height_[x] >= 0 || placed.count(cl_[x].bits)) continue;
      bool ready = true;
      for (int y = 0; y < n && ready; ++y)
        if (l_less(y, x) && !placed.count(cl_[y].bits)) ready = false;
      if (ready) next.push_back(x);
    }
    if (next.empty()) throw std::logic_error("stratification stalled");
    for (int x : next) height_[x] = stage;
    for (int x : next) placed.insert(cl_[x].bits);
    ++stage;
  }
  for (int x = 0; x < n; ++x)
    if (height_[x] < 0) height_[x] = height_[class_[x].first()];
}

int ClosureLattice::index_of(VertexSet y) const {
  for (int i = 0; i < static_cast<int>(closed_.size()); ++i)
    if (closed_[i] == y) return i;
  return -1;
}

std::vector<std::pair<int, int>> ClosureLattice::hasse_edges() const {
  const int m = static_cast<int>(closed_.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || !closed_[i].subset_of(closed_[j])) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k) {
        if (k == i || k == j) continue;
        if (closed_[i].subset_of(closed_[k]) && closed_[k].subset_of(closed_[j])) cover = false;
      }
      if (cover) out.emplace_back(i, j);
    }
  }
  return out;
}

LRel ClosureLattice::l_compare(int x, int y) const {
  if (cl_[x] == cl_[y]) return LRel::equal;
  if (cl_[x].subset_of(cl_[y])) return LRel::less;
  if (cl_[y].subset_of(cl_[x])) return LRel::greater;
  return LRel::incomparable;
}

bool ClosureLattice::l_minimal(int x) const {
  for (int y = 0; y < graph_.size(); ++y)
    if (l_less(y, x)) return false;
  return true;
}

bool ClosureLattice::l_maximal(int x) const {
  for (int y = 0; y < graph_.size(); ++y)
    if (l_less(x, y)) return false;
  return true;
}

std::vector<VertexSet> ClosureLattice::l_max_sets() const {
  std::set<std::uint64_t> seen;
  std::vector<VertexSet> out;
  for (VertexSet y : closed_) {
    for (int x = 0; x < graph_.size(); ++x) {
      if (cl_[x] == y && l_maximal(x)) {
        if (seen.insert(y.bits).second) out.push_back(y);
        break;
      }
    }
  }
  return out;
}

VertexSet ClosureLattice::max_support(int x) const {
  VertexSet out;
  for (int z = 0; z < graph_.size(); ++z) {
    if (!l_maximal(z)) continue;
    LRel r = l_compare(x, z);
    if (r == LRel::less || r == LRel::equal) out.add(z);
  }
  return out;
}

TotalOrder TotalOrder::build(const ClosureLattice& lat, std::vector<int> tie_break) {
  const int n = lat.graph().size();
  if (tie_break.empty()) {
    tie_break.resize(n);
    std::iota(tie_break.begin(), tie_break.end(), 0);
  }
  {
    std::vector<int> check = tie_break;
    std::sort(check.begin(), check.end());
    std::vector<int> want(n);
    std::iota(want.begin(), want.end(), 0);
    if (check != want) throw std::invalid_argument("tie_break is not a permutation of the vertices");
  }
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[tie_break[i]] = i;

  // One representative per class, keyed by the tie-break-least member.
  std::vector<VertexSet> classes;
  {
    VertexSet done;
    for (int v : tie_break) {
      if (done.contains(v)) continue;
      classes.push_back(lat.equiv_class(v));
      done |= classes.back();
    }
  }

  int max_h = 0;
  for (int x = 0; x < n; ++x) max_h = std::max(max_h, lat.height(x));

  // Stages are emitted from the highest down: each later stage is placed
  // in front of everything ordered before it.  Inside a stage, classes run
  // in increasing tie-break order of their least new vertex, and vertices
  // inside a class in tie-break order.
  TotalOrder out;
  out.tie_break_ = tie_break;
  for (int h = max_h; h >= 0; --h) {
    std::vector<VertexSet> stage;
    for (VertexSet cls : classes)
      if (lat.height(cls.first()) == h) stage.push_back(cls);
    std::sort(stage.begin(), stage.end(), [&](VertexSet a, VertexSet b) {
      auto least = [&](VertexSet s) {
        int best = -1;
        for (int v : s.members())
          if (best < 0 || rank[v] < rank[best]) best = v;
        return rank[best];
      };
      return least(a) < least(b);
    });
    for (VertexSet cls : stage) {
      std::vector<int> vs = cls.members();
      std::sort(vs.begin(), vs.end(), [&](int a, int b) { return rank[a] < rank[b]; });
      out.seq_.insert(out.seq_.end(), vs.begin(), vs.end());
    }
  }
  out.pos_.resize(n);
  for (int i = 0; i < n; ++i) out.pos_[out.seq_[i]] = i;
  return out;
}

std::vector<int> TotalOrder::sorted(VertexSet y) const {
  std::vector<int> vs = y.members();
  std::sort(vs.begin(), vs.end(), [&](int a, int b) { return pos_[a] < pos_[b]; });
  return vs;
}

VertexSet TotalOrder::min_reps(const ClosureLattice& lat, VertexSet y) const {
  VertexSet out;
  for (int v : y.members()) {
    bool least = true;
    for (int u : lat.equiv_class(v).members())
      if (pos_[u] < pos_[v]) least = false;
    if (least) out.add(v);
  }
  return out;
}

Context::Context(Graph g, std::vector<int> tie_break)
    : lattice_(std::move(g)), order_(TotalOrder::build(lattice_, std::move(tie_break))) {}

}  // namespace raag

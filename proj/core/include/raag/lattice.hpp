#ifndef RAAG_LATTICE_HPP
#define RAAG_LATTICE_HPP

#include <vector>

#include "raag/graph.hpp"
#include "raag/vertex_set.hpp"

namespace raag {

/// Comparison of two vertices under the order induced by inclusion of their
/// singleton closures.
enum class LRel { less, equal, greater, incomparable };

/// The lattice L of closed subsets of a graph, together with the derived
/// per-vertex data: singleton closures, equivalence classes under equal
/// orthogonal complements, and heights of the stage stratification.
class ClosureLattice {
 public:
  explicit ClosureLattice(Graph g);

  const Graph& graph() const { return graph_; }

  /// All closed sets, sorted by (cardinality, bitmask) for determinism.
  const std::vector<VertexSet>& closed_sets() const { return closed_; }
  bool is_closed(VertexSet y) const { return index_of(y) >= 0; }
  int index_of(VertexSet y) const;

  VertexSet meet(VertexSet a, VertexSet b) const { return a & b; }
  VertexSet join(VertexSet a, VertexSet b) const { return graph_.closure(a | b); }

  /// Covering pairs (lower, upper) as indices into closed_sets().
  std::vector<std::pair<int, int>> hasse_edges() const;

  VertexSet cl_of(int x) const { return cl_[x]; }
  VertexSet equiv_class(int x) const { return class_[x]; }

  LRel l_compare(int x, int y) const;
  bool l_less(int x, int y) const { return l_compare(x, y) == LRel::less; }
  bool l_minimal(int x) const;
  bool l_maximal(int x) const;

  /// Closures of the maximal vertices, deduplicated, in closed-set order.
  std::vector<VertexSet> l_max_sets() const;

  /// Maximal vertices z with x <=_L z (the support allowed for row x of a
  /// matrix stabilising only the maximal closures).  The defining text uses
  /// the strict order; the non-strict variant implemented here is the one
  /// under which a maximal x supports its own image.
  VertexSet max_support(int x) const;

  /// Stage at which cl(x) enters the recursive stratification.
  int height(int x) const { return height_[x]; }

  /// Vertices with |[x]| == 1 / >= 2.
  VertexSet n1() const { return n1_; }
  VertexSet n2() const { return n2_; }

 private:
  Graph graph_;
  std::vector<VertexSet> closed_;
  std::vector<VertexSet> cl_;      // per vertex: cl({x})
  std::vector<VertexSet> class_;   // per vertex: [x]
  std::vector<int> height_;
  VertexSet n1_, n2_;
};

/// The total order on X built from the stage stratification.  Every free
/// choice the construction leaves open is resolved by a caller-supplied
/// tie-break permutation, so the result is deterministic.
class TotalOrder {
 public:
  /// tie_break must be a permutation of the vertex indices; it orders both
  /// the stage-internal choice of classes and the vertices inside a class.
  static TotalOrder build(const ClosureLattice& lat, std::vector<int> tie_break);

  /// sequence()[i] is the vertex at position i, least first.
  const std::vector<int>& sequence() const { return seq_; }
  int position(int v) const { return pos_[v]; }
  /// True when u strictly precedes v.
  bool precedes(int u, int v) const { return pos_[u] < pos_[v]; }
  const std::vector<int>& tie_break() const { return tie_break_; }

  /// Members of a set listed in order position, least first.
  std::vector<int> sorted(VertexSet y) const;
  /// The order-least member of [x] for each class, i.e. X^min restricted to y.
  VertexSet min_reps(const ClosureLattice& lat, VertexSet y) const;

 private:
  std::vector<int> seq_, pos_, tie_break_;
};

/// Bundles a graph with its lattice and total order.  Nearly every higher
/// operation needs all three, and words and matrices carry a pointer to
/// their ambient context so cross-context operations can be rejected.
class Context {
 public:
  explicit Context(Graph g, std::vector<int> tie_break = {});

  const Graph& graph() const { return lattice_.graph(); }
  const ClosureLattice& lattice() const { return lattice_; }
  const TotalOrder& order() const { return order_; }
  int size() const { return graph().size(); }

 private:
  ClosureLattice lattice_;
  TotalOrder order_;
};

}  // namespace raag

#endif

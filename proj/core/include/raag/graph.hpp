#ifndef RAAG_GRAPH_HPP
#define RAAG_GRAPH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/vertex_set.hpp"

namespace raag {

/// Distance value for vertices in distinct components.
inline constexpr int kUnreachable = -1;

/// A finite simple undirected graph with named vertices.  The position of a
/// name in the constructor list fixes the vertex index used by VertexSet.
/// Immutable after construction.
class Graph {
 public:
  Graph(std::vector<std::string> names,
        const std::vector<std::pair<std::string, std::string>>& edges);
  Graph(std::vector<std::string> names,
        const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  VertexSet all() const { return VertexSet::full(size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;
  /// Like index_of but throws std::invalid_argument for unknown names.
  int vertex(std::string_view name) const;

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  /// {v} together with the neighbors of v (the unit ball around v).
  VertexSet ball(int v) const { return ball_[v]; }
  std::vector<std::pair<int, int>> edges() const;

  /// Graph distance via breadth-first search; kUnreachable if disconnected.
  int distance(int u, int v) const;

  /// Y^perp: vertices at distance <= 1 from every member of Y.  By the
  /// standing convention the complement of the empty set is all of X.
  VertexSet orth(VertexSet y) const;
  /// cl(Y) = Y^perp^perp.
  VertexSet closure(VertexSet y) const { return orth(orth(y)); }

  bool is_simplex(VertexSet y) const;

  /// Full (induced) subgraph on Y.  Vertex names are kept; indices are
  /// renumbered to Y's increasing-index order.
  Graph induced(VertexSet y) const;

  /// The non-commutation graph: same vertices, complementary edges.
  Graph non_commutation() const;

  /// Connected components of the graph with the vertices of `removed`
  /// (and incident edges) deleted.  Components are returned in increasing
  /// order of their least vertex.
  std::vector<VertexSet> components_minus(VertexSet removed) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> ball_;
};

}  // namespace raag

#endif

#include "raag/graph.hpp"

#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace raag {

namespace {
std::vector<std::pair<int, int>> resolve_edges(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  auto find = [&](const std::string& n) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == n) return i;
    throw std::invalid_argument("unknown vertex name: " + n);
  };
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) out.emplace_back(find(a), find(b));
  return out;
}
}  // namespace

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : Graph(names, resolve_edges(names, edges)) {}

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
  const int n = size();
  if (n > 64) throw std::invalid_argument("graphs with more than 64 vertices are not supported");
  std::unordered_set<std::string> seen;
  for (const auto& nm : names_)
    if (!seen.insert(nm).second)
      throw std::invalid_argument("duplicate vertex name: " + nm);
  adj_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + names_[u]);
    adj_[u].add(v);
    adj_[v].add(u);
  }
  ball_.resize(n);
  for (int v = 0; v < n; ++v) ball_[v] = adj_[v] | VertexSet::single(v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("vertex index out of range");
}

std::optional<int> Graph::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int Graph::vertex(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown vertex name: " + std::string(name));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : (adj_[u] - VertexSet::full(u + 1)).members()) out.emplace_back(u, v);
  return out;
}

int Graph::distance(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(size(), kUnreachable);
  dist[u] = 0;
  std::queue<int> q;
  q.push(u);
  while (!q.empty()) {
    int w = q.front();
    q.pop();
    for (int z : adj_[w].members()) {
      if (dist[z] != kUnreachable) continue;
      dist[z] = dist[w] + 1;
      if (z == v) return dist[z];
      q.push(z);
    }
  }
  return kUnreachable;
}

VertexSet Graph::orth(VertexSet y) const {
  if (!y.subset_of(all())) throw std::invalid_argument("vertex set not contained in graph");
  VertexSet out = all();
  for (int v : y.members()) out &= ball_[v];
  return out;
}

bool Graph::is_simplex(VertexSet y) const {
  if (!y.subset_of(all())) throw std::invalid_argument("vertex set not contained in graph");
  for (int v : y.members())
    if (!(y - VertexSet::single(v)).subset_of(adj_[v])) return false;
  return true;
}

Graph Graph::induced(VertexSet y) const {
  if (!y.subset_of(all())) throw std::invalid_argument("vertex set not contained in graph");
  auto verts = y.members();
  std::vector<std::string> names;
  names.reserve(verts.size());
  for (int v : verts) names.push_back(names_[v]);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
      if (adjacent(verts[i], verts[j])) edges.emplace_back(i, j);
  return Graph(std::move(names), edges);
}

Graph Graph::non_commutation() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (!adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(names_, edges);
}

std::vector<VertexSet> Graph::components_minus(VertexSet removed) const {
  if (!removed.subset_of(all())) throw std::invalid_argument("vertex set not contained in graph");
  std::vector<VertexSet> out;
  VertexSet rest = all() - removed;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.first());
    for (;;) {
      VertexSet next = comp;
      for (int v : comp.members()) next |= adj_[v] & rest;
      if (next == comp) break;
      comp = next;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

}  // namespace raag

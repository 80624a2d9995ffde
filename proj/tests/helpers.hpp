#pragma once

#include <string>

#include "raag/io.hpp"

namespace raag::testing {

inline Graph p3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
inline Graph k3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }
inline Graph edgeless3() { return Graph({"a", "b", "c"}, std::vector<std::pair<int, int>>{}); }

/// Set literal: one character per vertex name, e.g. vs(g, "ab").
inline VertexSet vs(const Graph& g, const std::string& names) {
  VertexSet out;
  for (char c : names) out.add(g.vertex(std::string(1, c)));
  return out;
}

inline PCWord w(const Context& ctx, const std::string& literal) { return parse_word(ctx, literal); }

inline IntMatrix im(std::vector<std::vector<long long>> rows) {
  IntMatrix out;
  for (auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace raag::testing

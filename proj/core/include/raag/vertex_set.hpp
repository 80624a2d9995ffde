#ifndef RAAG_VERTEX_SET_HPP
#define RAAG_VERTEX_SET_HPP

#include <cstdint>
#include <vector>

namespace raag {

/// A subset of the vertices of a fixed graph, stored as a bitmask over the
/// vertex input order.  Supports at most 64 vertices, which is far beyond
/// anything the lattice algorithms can enumerate anyway.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return __builtin_popcountll(bits); }

  constexpr void add(int v) { bits |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
  constexpr VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

  /// Members in increasing index order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  int first() const { return bits ? __builtin_ctzll(bits) : -1; }
};

}  // namespace raag

#endif

#ifndef RAAG_MATRIX_HPP
#define RAAG_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "raag/lattice.hpp"

namespace raag {

/// Exact integer arithmetic throughout; products of many unipotent
/// generators grow without bound.
using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(int n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Int determinant(IntMatrix a);  // Bareiss, exact
/// Inverse of a matrix with determinant +-1; throws std::invalid_argument
/// otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// The support pattern attached to a closed set: the order positions split
/// into one block per class, entries allowed on the diagonal blocks and at
/// off-block positions (i,j) with the j-th vertex strictly below the i-th
/// in the closure order.
class StabPattern {
 public:
  static StabPattern of(const Context& ctx, VertexSet y);

  const Context& context() const { return *ctx_; }
  VertexSet set() const { return set_; }
  /// The members of the closed set in order position, least first; row and
  /// column i of a matrix with this pattern belong to vertices()[i].
  const std::vector<int>& vertices() const { return verts_; }
  int dim() const { return static_cast<int>(verts_.size()); }
  /// Half-open index ranges, one per class of a minimal representative.
  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
  int block_of(int i) const { return block_of_[i]; }
  bool in_diag_block(int i, int j) const { return block_of_[i] == block_of_[j]; }
  bool allows(int i, int j) const { return allowed_[i][j]; }

  bool operator==(const StabPattern& o) const {
    return ctx_ == o.ctx_ && set_ == o.set_;
  }

 private:
  const Context* ctx_ = nullptr;
  VertexSet set_;
  std::vector<int> verts_;
  std::vector<std::pair<int, int>> blocks_;
  std::vector<int> block_of_;
  std::vector<std::vector<bool>> allowed_;
};

/// An integer matrix bound to a pattern.  Construction checks membership:
/// support inside the allowed positions and every diagonal block of
/// determinant +-1, so a StabMatrix is always a group element.
class StabMatrix {
 public:
  static bool is_member(const IntMatrix& a, const StabPattern& p);
  /// Throws std::invalid_argument when `a` violates the pattern.
  static StabMatrix checked(StabPattern p, IntMatrix a);
  static StabMatrix identity(StabPattern p);

  const StabPattern& pattern() const { return pattern_; }
  const IntMatrix& entries() const { return entries_; }
  const Int& at(int i, int j) const { return entries_[i][j]; }
  int dim() const { return pattern_.dim(); }

  StabMatrix operator*(const StabMatrix& o) const;
  StabMatrix inverse() const;
  bool operator==(const StabMatrix& o) const {
    return pattern_ == o.pattern_ && entries_ == o.entries_;
  }

  /// Z-minor: delete rows and columns of vertices outside z.  z must be
  /// closed and contained in the pattern's set.
  StabMatrix minor_to(VertexSet z) const;
  /// Embed into the pattern of a larger closed set y: copy entries at this
  /// set's positions, identity elsewhere.
  StabMatrix embed_into(VertexSet y) const;

  /// A = U * D with D the block-diagonal part and U unipotent on blocks;
  /// returned as (U, D).
  std::pair<StabMatrix, StabMatrix> split_semidirect() const;
  bool is_block_diagonal() const;
  bool is_block_unipotent() const;

 private:
  StabMatrix(StabPattern p, IntMatrix a) : pattern_(std::move(p)), entries_(std::move(a)) {}
  StabPattern pattern_;
  IntMatrix entries_;
};

/// Row support condition for stabilisers of the maximal closures only:
/// row x may be supported only on the maximal vertices above x.  `a` is
/// |X| x |X| in order position.
bool max_pattern_check(const IntMatrix& a, const Context& ctx);

/// Deterministic pseudo-random member of the pattern: diagonal blocks are
/// products of at most `bound` elementary moves, off-block allowed entries
/// uniform in [-bound, bound].
StabMatrix sample_member(const StabPattern& p, int bound, std::uint64_t seed);

}  // namespace raag

#endif

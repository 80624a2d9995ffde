#ifndef RAAG_AUT_HPP
#define RAAG_AUT_HPP

#include <variant>
#include <vector>

#include "raag/matrix.hpp"
#include "raag/word.hpp"

namespace raag {

/// An endomorphism of the group (or of a parabolic subgroup, when the
/// domain is a proper closed set) given vertexwise by word images.
class AutMap {
 public:
  static AutMap identity(const Context& ctx);
  /// Validates that adjacent vertices get commuting images, so the map
  /// extends to the whole group.  `domain` defaults to all of X.
  static AutMap from_images(const Context& ctx, std::vector<PCWord> images,
                            VertexSet domain = VertexSet());

  const Context& context() const { return *ctx_; }
  VertexSet domain() const { return domain_; }
  const PCWord& image(int v) const { return images_[v]; }
  PCWord apply(const PCWord& w) const;
  /// x maps through *this first, then through `next`.
  AutMap then(const AutMap& next) const;
  bool operator==(const AutMap& o) const {
    return ctx_ == o.ctx_ && domain_ == o.domain_ && images_ == o.images_;
  }

 private:
  const Context* ctx_ = nullptr;
  VertexSet domain_;
  std::vector<PCWord> images_;
};

/// A vertexwise map paired with its inverse, for uses that need to pull
/// back as well as push forward.  Built from atoms, whose inverses are
/// known syntactically.
class Automorphism {
 public:
  static Automorphism identity(const Context& ctx);
  /// Checks the pair really is mutually inverse on the generators.
  Automorphism(AutMap fwd, AutMap inv);

  const Context& context() const { return fwd_.context(); }
  const AutMap& map() const { return fwd_; }
  const AutMap& inverse_map() const { return inv_; }
  Automorphism then(const Automorphism& next) const;
  Automorphism inverse() const { return Automorphism(inv_, fwd_); }

 private:
  AutMap fwd_, inv_;
};

// ---- generator atoms -------------------------------------------------

/// x -> x^{-1}, everything else fixed.
struct SignFlip {
  int vertex;
  bool operator==(const SignFlip&) const = default;
};

/// A unimodular change of basis on one equivalence class of size >= 2;
/// rows and columns run over the class in order position.
struct ClassMove {
  VertexSet cls;
  IntMatrix mat;
  bool operator==(const ClassMove&) const = default;
};

/// x -> x y^e, legal exactly when x^perp is strictly contained in y^perp.
struct Transvection {
  int x;
  int y;
  long long e;
  bool operator==(const Transvection&) const = default;
};

using GeneratorAtom = std::variant<SignFlip, ClassMove, Transvection>;
using GeneratorWord = std::vector<GeneratorAtom>;

struct GeneratorInventory {
  std::vector<int> sign_flips;                     // one per vertex
  std::vector<VertexSet> move_classes;             // classes with >= 2 members
  std::vector<std::pair<int, int>> transvections;  // legal (x, y) pairs
};

GeneratorInventory enumerate_generators(const Context& ctx);

/// Throws std::invalid_argument if the atom is not legal for the graph.
void check_atom(const Context& ctx, const GeneratorAtom& atom);
GeneratorAtom atom_inverse(const GeneratorAtom& atom);
AutMap atom_to_automap(const Context& ctx, const GeneratorAtom& atom);
StabMatrix atom_to_matrix(const Context& ctx, const GeneratorAtom& atom);
Automorphism atom_to_automorphism(const Context& ctx, const GeneratorAtom& atom);
AutMap word_to_automap(const Context& ctx, const GeneratorWord& word);

// ---- the matrix representation ---------------------------------------

/// Exponent matrix of a stabilising map, rows and columns over the domain
/// in order position.  Throws std::domain_error when some image leaves the
/// abelian subgroup on its closure (the map is then not a stabiliser).
IntMatrix raw_matrix_of(const AutMap& phi);
/// As above but bound to the pattern of the domain; additionally requires
/// invertibility over the integers.
StabMatrix matrix_of(const AutMap& phi);

/// Inverse of matrix_of on matrices over X (or any closed domain).
AutMap automap_of(const StabMatrix& a);

/// True iff every vertex image stays in the abelian subgroup of its
/// closure and the exponent matrix is invertible over the integers.
bool stabilizes_L(const AutMap& phi);

/// Constructive generator decomposition: returns a word whose atom-matrix
/// product equals `a` exactly.  Requires a matrix over all of X.
GeneratorWord decompose(const StabMatrix& a);

/// Restriction of a stabilising map to a closed subset.
AutMap restrict_to(const AutMap& phi, VertexSet y);

}  // namespace raag

#endif

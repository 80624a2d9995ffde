#ifndef RAAG_WORD_HPP
#define RAAG_WORD_HPP

#include <vector>

#include "raag/lattice.hpp"

namespace raag {

/// A single generator occurrence, sign +1 or -1.
struct Letter {
  int vertex;
  int sign;
  auto operator<=>(const Letter&) const = default;
};

/// An element of the partially commutative group of the ambient graph, held
/// in canonical normal form: freely and commutation reduced, and the
/// lexicographically least linearization of its trace class under the
/// ambient total order (positive sign before negative at equal vertices).
class PCWord {
 public:
  PCWord() = default;
  explicit PCWord(const Context* ctx) : ctx_(ctx) {}  // identity

  static PCWord from_letters(const Context& ctx, std::vector<Letter> raw);
  static PCWord generator(const Context& ctx, int vertex, int sign = 1);

  const Context* context() const { return ctx_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  VertexSet alpha() const;

  PCWord operator*(const PCWord& o) const;
  PCWord inverse() const;
  /// this^g = g^{-1} * this * g.
  PCWord conjugated_by(const PCWord& g) const;
  bool operator==(const PCWord&) const = default;

  /// True when `l` can be moved to the front of the normal form, i.e. the
  /// first occurrence of its vertex has sign l.sign and everything before it
  /// commutes with it.
  bool has_left_divisor(Letter l) const;

  /// Peels letters that divide on the left inverted and on the right plain,
  /// reaching a cyclically minimal core.
  struct Cyclic;
  Cyclic cyclic_reduce() const;

  /// Commuting factors along the connected components of the
  /// non-commutation graph of the support.  Requires a cyclically minimal
  /// word (throws std::invalid_argument otherwise).
  std::vector<PCWord> block_decomposition() const;

  bool in_parabolic(VertexSet y) const { return alpha().subset_of(y); }

  /// Splits off the maximal left divisor supported inside y, greedily by
  /// order-least strippable letter.  Returns (prefix, rest) with
  /// prefix * rest == *this and rest having no left divisor in G(y).
  std::pair<PCWord, PCWord> strip_left_divisors(VertexSet y) const;

  /// Exponent sums per vertex (size |X|, zero outside s).  Requires s to be
  /// a simplex containing the support.
  std::vector<long long> abelian_exponents(VertexSet s) const;

 private:
  const Context* ctx_ = nullptr;
  std::vector<Letter> letters_;
};

/// Result of cyclic reduction: the original word equals
/// conjugator^{-1} * core * conjugator.
struct PCWord::Cyclic {
  PCWord conjugator;
  PCWord core;
};

/// Raises std::invalid_argument when two words live in different contexts.
void require_same_context(const PCWord& a, const PCWord& b);

}  // namespace raag

#endif

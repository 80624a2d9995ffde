#ifndef RAAG_CONJ_HPP
#define RAAG_CONJ_HPP

#include <optional>

#include "raag/aut.hpp"

namespace raag {

/// Conjugates one connected component of the graph minus x^perp by x.
struct ElemConjSpec {
  int x;
  VertexSet component;
  int direction = 1;  // conjugate by x or by x^{-1}
  bool operator==(const ElemConjSpec&) const = default;
};

/// All legal elementary conjugation specs of the graph (direction +1).
std::vector<ElemConjSpec> enumerate_elementary_conj(const Context& ctx);

AutMap elementary_conj_map(const Context& ctx, const ElemConjSpec& spec);
Automorphism elementary_conj(const Context& ctx, const ElemConjSpec& spec);

/// x -> w^{-1} x w for every vertex.
AutMap inner_map(const PCWord& w);
Automorphism inner(const PCWord& w);

/// True iff every vertex image is conjugate to the vertex itself.
bool is_conjugating(const AutMap& phi);

/// Searches for g such that the image of G(Y) equals G(Y)^g.  Candidates
/// are harvested from the cyclic-decomposition conjugators of the images
/// of Y's generators (all subwords and inverses, bounded by twice the
/// longest image); each is verified in both directions.  Absence of a
/// witness within the search space is a legitimate result.
std::optional<PCWord> conj_stab_witness(const Automorphism& theta, VertexSet y);

struct SemidirectFactorization {
  AutMap tau;  // conjugating part
  AutMap phi;  // stabilising part; theta = tau then phi
};

/// Factors a conjugate-stabilising automorphism as theta = tau * phi with
/// tau conjugating and phi a stabiliser, following the constructive proof:
/// cyclically reduce each vertex image, normalize the conjugator by
/// stripping its left divisors in G(x^perp), and read the stabilising part
/// off the cores.  Throws std::domain_error when theta fails the
/// conjugate-stabiliser membership check and std::logic_error when the
/// construction cannot be verified afterwards.
SemidirectFactorization factor_semidirect(const Automorphism& theta);

}  // namespace raag

#endif

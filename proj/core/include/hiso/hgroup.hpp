#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hiso/graph.hpp"
#include "hiso/halgebra.hpp"
#include "hiso/modarith.hpp"
#include "hiso/rng.hpp"

namespace hiso {

/**
 * An element of the group of a lie-kind algebra in the normal form
 * g_1^{alpha_1} ... g_n^{alpha_n} * z with z central: alpha holds the n
 * principal exponents (each mod p^3), central the a-span component.  The
 * normal form is canonical, so equality is componentwise.
 */
struct HGroupElement {
  MixedVector alpha;
  MixedVector central;
};

bool operator==(const HGroupElement& a, const HGroupElement& b);
bool operator!=(const HGroupElement& a, const HGroupElement& b);

/**
 * The 2-nilpotent group attached to a lie-kind algebra together with a
 * generator ordering chi (basis index -> generator index): principal
 * generator g_i stands for the basis vector v_{chi^{-1}(i)}.  Products add
 * exponents and correct the central part by the reordering commutators
 * sum_{i<j} alpha_j beta_i [g_j, g_i], where [g_j, g_i] is the algebra
 * bracket of the matching basis vectors.  The resulting group has exponent
 * p^3 and nilpotency class 2; its center contains the whole a-span.
 */
class HGroup {
 public:
  HGroup(HAlgebra base, VertexBijection chi);
  /// Identity ordering: g_i stands for v_i.
  explicit HGroup(HAlgebra base);

  const HAlgebra& algebra() const { return base_; }
  const VertexBijection& chi() const { return chi_; }
  int generator_count() const { return base_.generator_count(); }
  int pair_count() const { return base_.pair_count(); }
  Prime prime() const { return base_.prime(); }

  HGroupElement identity_element() const;
  /// Principal generator g_i (0-based group index).
  HGroupElement generator(int i) const;
  /// Unit central element of pair slot q.
  HGroupElement central_generator(int q) const;
  HGroupElement random_element(RandomSource& rng) const;

  HGroupElement mul(const HGroupElement& x, const HGroupElement& y) const;
  HGroupElement inv(const HGroupElement& x) const;
  HGroupElement power(const HGroupElement& x, uint64_t k) const;
  /// x^{-1} y^{-1} x y; always has zero alpha part.
  HGroupElement commutator(const HGroupElement& x, const HGroupElement& y) const;
  /// Least k >= 1 with x^k = identity; divides p^3.
  uint64_t element_order(const HGroupElement& x) const;

  /// p^{3n} times the product of the pair moduli; throws
  /// std::overflow_error when the count does not fit in 64 bits.
  uint64_t order() const;

  /// Same prime, generator count and central moduli (elements of the two
  /// groups have interchangeable shapes; the laws may still differ).
  bool same_shape(const HGroup& other) const;

  /// The reordering commutator [g_j, g_i] for group indices i < j.
  const MixedVector& reorder_term(int q) const { return comm_[q]; }

 private:
  void init();
  MixedVector correction(const MixedVector& a, const MixedVector& b) const;

  HAlgebra base_;
  VertexBijection chi_;
  VertexBijection sigma_;  // generator index -> basis index
  ProfilePtr alpha_profile_;
  std::vector<MixedVector> comm_;
};

/**
 * A word in the named generators of a presentation: letters are
 * (generator index, exponent) with principal generators 0..n-1 followed by
 * one central generator per pair slot (n..n+l-1).
 */
struct GroupWord {
  std::vector<std::pair<int, int64_t>> letters;
};

/// Value of a word in the group (index >= n selects central slot index-n).
HGroupElement evaluate_word(const HGroup& g, const GroupWord& w);

/**
 * Finite presentation of the group: named generators g1..gn plus one
 * central name per pair, and relators in a fixed order — bracket relators
 * [gi,gj]*(central word)^-1 over generator pairs in lexicographic order,
 * centrality of the central names among themselves and against every gi,
 * then power relators gi^{p^3} and one per central name with its additive
 * order.  Every relator evaluates to the identity.
 */
struct Presentation {
  int principal_count = 0;
  std::vector<std::string> names;
  std::vector<GroupWord> relators;
  std::vector<std::string> relator_text;  // aligned with relators

  /**
   * Rendered as:
   *   F := FreeGroup( "g1", "g2", "a12" );
   *   rels := [
   *     [g1,g2]*a12^-1,
   *     ...
   *   ];
   * where [x,y] stands for x^-1*y^-1*x*y.
   */
  std::string to_text() const;
};

Presentation export_presentation(const HGroup& g);

/**
 * A group isomorphism arising from an algebra isomorphism: pi_tilde
 * permutes the principal generators (g_i -> g'_{pi_tilde(i)}) and
 * algebra_iso transports central parts.
 */
struct GroupIsoWitness {
  AlgebraIso algebra_iso;
  VertexBijection pi_tilde;
};

/**
 * Lifts an algebra isomorphism f: g1.algebra -> g2.algebra to a group
 * isomorphism.  The image of g_1^{a_1}...g_n^{a_n} * z is the product
 * g'_{pi(1)}^{a_1} ... g'_{pi(n)}^{a_n} * f(z) evaluated (and thereby
 * renormalized) in g2, with pi = chi2 . f . chi1^{-1}.  Throws when f is
 * not a valid isomorphism witness between the base algebras; the returned
 * witness has been checked multiplicative on all generator pairs.
 */
GroupIsoWitness transport_iso(const AlgebraIso& f, const HGroup& g1,
                              const HGroup& g2);

HGroupElement apply_transport(const GroupIsoWitness& w, const HGroup& g1,
                              const HGroup& g2, const HGroupElement& x);

/**
 * Reads the algebra back off the group: basis vector u_k is the principal
 * generator g_{chi(k)}, the product u_k x u_l is the group commutator
 * [g_{chi(k)}, g_{chi(l)}], and the central span with its pair tags is
 * carried over.  The result equals the base algebra entry for entry, so
 * the identity vertex map witnesses the isomorphism.
 */
HAlgebra reconstruct_algebra(const HGroup& g);

}  // namespace hiso

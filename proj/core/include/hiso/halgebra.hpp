#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hiso/graph.hpp"
#include "hiso/modarith.hpp"
#include "hiso/modmatrix.hpp"
#include "hiso/rng.hpp"

namespace hiso {

enum class AlgebraKind { commutative, lie };

/**
 * An element of a graph-derived algebra: a v-part over the vertex
 * generators (each coordinate mod p^3) plus an a-part over the pair
 * generators (each coordinate mod p for edges, mod p^2 for non-edges).
 */
struct AlgebraElement {
  MixedVector vpart;
  MixedVector apart;
};

bool operator==(const AlgebraElement& a, const AlgebraElement& b);
bool operator!=(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);

/**
 * Structure constants of an algebra attached to a graph on n vertices over
 * Z/p^3Z.  Generators are v_1..v_n plus one a-generator per vertex pair
 * (i, j), i < j, in lexicographic order; an a-generator has additive order
 * p when the pair is an edge and p^2 when it is not.  Products of two
 * v-generators land in the a-span, the a-span annihilates everything, and
 * v_i * v_i = 0.  The kind switches the symmetric product (v_i v_j =
 * v_j v_i) against the alternating bracket ([v_j, v_i] = -[v_i, v_j]).
 *
 * The product table vv(i, j) for i < j is arbitrary, which is what lets a
 * basis change (scramble_basis) be represented in the same type.
 */
class HAlgebra {
 public:
  /// Associative-flavored algebra of a graph: v_i v_j = a_ij for i != j.
  static HAlgebra graph_algebra(const Graph& g, Prime p);
  /// Nilpotent Lie algebra of a graph: [v_i, v_j] = a_ij = -[v_j, v_i].
  static HAlgebra h_algebra(const Graph& g, Prime p);
  /// Arbitrary structure constants (basis-changed or renewed algebras).
  static HAlgebra from_table(Prime p, int n, AlgebraKind kind,
                             std::vector<bool> pair_edge,
                             std::vector<MixedVector> vv);

  Prime prime() const { return p_; }
  int generator_count() const { return n_; }
  AlgebraKind kind() const { return kind_; }

  int pair_count() const { return static_cast<int>(pairs_.size()); }
  std::pair<int, int> pair_at(int q) const { return pairs_[q]; }
  int pair_index(int i, int j) const;
  bool pair_is_edge(int q) const { return pair_edge_[q]; }
  /// The graph read off the pair tags (edges are the order-p pairs).
  Graph tag_graph() const;

  const ProfilePtr& vertex_profile() const { return vprofile_; }
  const ProfilePtr& central_profile() const { return aprofile_; }

  /// v_i * v_j resolved for any ordered pair i != j (sign applied for lie).
  MixedVector basis_product(int i, int j) const;
  const MixedVector& table_entry(int q) const { return vv_[q]; }

  AlgebraElement zero() const;
  AlgebraElement vertex_gen(int i) const;
  AlgebraElement pair_gen(int q) const;
  AlgebraElement random_element(RandomSource& rng) const;

  /// Bilinear product of two elements; the result has zero v-part.
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

  bool same_shape(const HAlgebra& other) const;

 private:
  HAlgebra(Prime p, int n, AlgebraKind kind, std::vector<bool> pair_edge,
           std::vector<MixedVector> vv);

  Prime p_;
  int n_;
  AlgebraKind kind_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<bool> pair_edge_;
  ProfilePtr vprofile_;
  ProfilePtr aprofile_;
  std::vector<MixedVector> vv_;
};

/**
 * A generator-permuting isomorphism candidate between two algebras of the
 * same shape: v_i maps to v_{b(i)} and the pair generators follow, with a
 * sign flip on reversed pairs in the lie kind.
 */
struct AlgebraIso {
  VertexBijection vertex_map;

  AlgebraIso inverse() const { return AlgebraIso{vertex_map.inverse()}; }
};

/// Image of x under the pair-derived action of f; requires preserved tags.
AlgebraElement apply_iso(const AlgebraIso& f, const HAlgebra& from,
                         const HAlgebra& to, const AlgebraElement& x);

/**
 * Lifts a vertex bijection to the induced algebra map when it preserves
 * edge tags (edges onto edges, non-edges onto non-edges); empty otherwise.
 * Throws when the two algebras do not have matching size, prime and kind.
 */
std::optional<AlgebraIso> induced_iso(const VertexBijection& b, const HAlgebra& a1,
                                      const HAlgebra& a2);

/// True iff f is a well-defined generator map that is multiplicative on all
/// basis pairs (additivity and Z/p^3Z-linearity are structural).
bool check_iso_witness(const AlgebraIso& f, const HAlgebra& a1, const HAlgebra& a2);

/**
 * Rewrites the algebra in a new module basis.  Row i of vbasis gives the
 * v-part coordinates (mod p^3) of the new i-th v-generator; central[k]
 * gives the image of the k-th a-generator in old a-coordinates.  The
 * change must be invertible and must map the a-span onto itself; the
 * returned algebra has the same pair tags with rewritten structure
 * constants.
 */
HAlgebra change_basis(const HAlgebra& a, const ModMatrix& vbasis,
                      const std::vector<MixedVector>& central);

/// Deterministic random basis change preserving the a-span (lie kind only).
HAlgebra scramble_basis(const HAlgebra& a, uint64_t seed);

/**
 * Searches for a graph whose lie algebra is isomorphic to the given one.
 * Candidate bases are drawn from GL(n, p) lifted entrywise to Z/p^3Z
 * (identity first, then lexicographic); a candidate is accepted when every
 * pairwise bracket has pure additive order p or p^2, the multiset of those
 * orders matches the pair tags, and the brackets generate the whole a-span
 * (mod-p determinant test), which together exhibit an explicit isomorphism
 * with the graph algebra read off the orders.  Empty when no candidate
 * within the search space works.  Guarded to n <= max_n.
 */
std::optional<Graph> recover_graph(const HAlgebra& a, int max_n = 3);

/**
 * Plain text dump: header "p n kind", one line "i j edge|nonedge" per pair
 * (1-based, lexicographic), then one line per nonzero product
 * "v_i * v_j = c * a_kl [+ ...]" listing the nonzero coefficients.
 */
std::string algebra_to_text(const HAlgebra& a);

}  // namespace hiso

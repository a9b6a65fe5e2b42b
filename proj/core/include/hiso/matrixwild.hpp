#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiso/hgroup.hpp"
#include "hiso/modarith.hpp"
#include "hiso/modmatrix.hpp"

namespace hiso {

/// Two square matrices of equal size over Z/pZ.
struct MatrixPair {
  ModMatrix a;
  ModMatrix b;
};

/**
 * A matrix problem: a family of matrix tuples together with a free-text
 * description of the admissible transformations (e.g. "simultaneous
 * similarity by S in GL(n, p)").  The type only carries the data; apart
 * from simsim below no generic equivalence decision is offered, since the
 * admissible transformations of an arbitrary problem are unconstrained
 * text.
 */
struct MatrixProblem {
  int arity = 0;                                  // matrices per instance
  std::vector<std::vector<ModMatrix>> instances;  // each of size arity
  std::string transformations;
};

/**
 * Simultaneous similarity of matrix pairs by brute force: an invertible S
 * over Z/pZ with S A1 S^{-1} = A2 and S B1 S^{-1} = B2, searched in
 * lexicographic order of the flattened entries (so the answer is
 * deterministic), or nothing when no such S exists.  Exact but exponential;
 * guarded to n <= 3 and p <= 3.
 */
std::optional<ModMatrix> simsim(const MatrixPair& p1, const MatrixPair& p2,
                                Prime p);

/**
 * Order of the central a-span of the group: the product of the pair
 * moduli, p^{|E|} * p^{2(l - |E|)} with l = n(n-1)/2.  At least p^3 for
 * every graph on >= 3 vertices, which is the precondition (throws below
 * it); throws std::overflow_error when the count does not fit in 64 bits.
 */
uint64_t center_order_bound(const HGroup& g);

}  // namespace hiso

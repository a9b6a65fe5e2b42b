#pragma once

#include <optional>

#include "hiso/graph.hpp"

namespace hiso {

/**
 * Exact isomorphism test for simple graphs.  Iterated neighborhood-color
 * refinement down to a stable partition, then backtracking that splits the
 * smallest non-singleton cell, lowest vertex index first.  Deterministic:
 * equal inputs always yield the same witness.  Returns the first witness
 * found, or nothing when the graphs are not isomorphic.
 */
std::optional<VertexBijection> graph_iso(const Graph& g1, const Graph& g2);

/**
 * Exact isomorphism test for two-sorted directed multigraphs.  A witness
 * preserves sorts, arc directions and exact multiplicities.  Same search
 * strategy and determinism guarantees as graph_iso.
 */
std::optional<VertexBijection> multigraph_iso(const DiMultigraph& m1,
                                              const DiMultigraph& m2);

/**
 * Reduction from directed multigraphs (multiplicities at most 3) to simple
 * graphs preserving isomorphism.  Each arc u -> v of multiplicity k becomes
 * k disjoint paths u - x - y - v where every x carries a pendant leaf that
 * marks the tail side; every original vertex additionally carries a pendant
 * path of length 3 so originals and gadget vertices cannot be confused by
 * color refinement.  Original vertex v keeps index v in the output.
 * Throws std::invalid_argument when a multiplicity exceeds 3.
 */
Graph encode_simple(const DiMultigraph& m);

}  // namespace hiso

#pragma once

#include <vector>

#include "hiso/cayley.hpp"
#include "hiso/graph.hpp"

namespace hiso {

/**
 * The two-sorted directed multigraph of a finite group: one element vertex
 * per group element and one triple vertex per ordered triple (u, v, w).
 * Every triple receives the arcs u -> (u,v,w) with multiplicity 1 and
 * v -> (u,v,w) with multiplicity 2 when u*v = w (plus the product arc
 * (u,v,w) -> w with multiplicity 1), and u -> (u,v,w), v -> (u,v,w) each
 * with multiplicity 1 otherwise; coincident arcs merge by summing, so the
 * u = v cases carry multiplicities 3 and 2.  Requires order >= 3, which
 * keeps the weighted degree of every element vertex strictly above that of
 * every triple vertex (the separation that pins the sorts).
 */
DiMultigraph build_gamma(const CayleyGroup& g);

/// Triple vertex id of (u, v, w) inside build_gamma(g)'s vertex numbering.
int gamma_triple_id(const CayleyGroup& g, int u, int v, int w);

/**
 * Extends a group homomorphism h: g -> target (validated, throws when the
 * map fails the pair scan or the target has order < 3) to a vertex map of
 * the multigraphs: elements map by h and (u,v,w) to (h(u),h(v),h(w)).
 * Every arc of build_gamma(g) then lands on an arc of build_gamma(target),
 * possibly of higher multiplicity.
 */
std::vector<int> extend_homomorphism(const std::vector<int>& h,
                                     const CayleyGroup& g,
                                     const CayleyGroup& target);

/// True when every arc (src, dst) of m1 satisfies
/// multiplicity(f(src), f(dst)) >= 1 in m2 — arc preservation, ignoring
/// multiplicities and sorts.
bool arcs_preserved(const std::vector<int>& f, const DiMultigraph& m1,
                    const DiMultigraph& m2);

/**
 * Isomorphism of the two groups decided through their multigraphs:
 * multigraph_iso(build_gamma(g1), build_gamma(g2)) interpreted as a yes/no
 * answer.  Guarded to order <= 8 (30..520 vertices); throws beyond.
 */
bool gamma_iso_check(const CayleyGroup& g1, const CayleyGroup& g2);

}  // namespace hiso

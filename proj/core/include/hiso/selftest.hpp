#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hiso/graph.hpp"

namespace hiso {

/// One named check: a verdict plus a short human-readable detail line
/// (corpus sizes, counts, or the first failure).
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Measured input/output sizes for one construction with its exact bound.
struct SizeReport {
  std::string input_kind;
  uint64_t input_size = 0;
  std::string output_kind;
  uint64_t output_size = 0;
  std::string bound;
  bool bound_satisfied = false;
};

/// All 2^(n(n-1)/2) labeled simple graphs on exactly n vertices, ordered by
/// edge-subset rank.
std::vector<Graph> all_graphs(int n);

// ---------------------------------------------------------------------------
// Theorem-level checks.  Each runs a self-contained corpus and never throws
// on mathematical failure (the verdict carries it); they throw only on
// internal misuse.  Parameter defaults are the documented desk-scale runs.
// ---------------------------------------------------------------------------

/// Graph isomorphism agrees with the algebra round trip (basis scramble,
/// graph recovery, graph isomorphism) over all graph pairs on <= max_n
/// vertices.  max_n is capped at 3 by the recovery search.
CheckResult check_algebra_roundtrip(uint32_t p = 3, int max_n = 3,
                                    uint64_t seed = 0);

/// Transported group isomorphisms are multiplicative: for every isomorphic
/// graph pair on <= max_n vertices and p in {3,5}, the lifted map satisfies
/// F(xy) = F(x)F(y) on `samples` random element pairs (both identity and
/// rotated generator orderings are exercised).
CheckResult check_transport_multiplicativity(int max_n = 4, int samples = 1000,
                                             uint64_t seed = 0);

/// Reconstructing the algebra from its group reproduces it: the identity
/// generator map witnesses the isomorphism for every graph on <= max_n
/// vertices (p in {3,5}, identity and rotated orderings).
CheckResult check_renewal_reconstruction(int max_n = 4);

/// Multigraph-based group isomorphism agrees with the multiplication-table
/// oracle on every ordered pair from the standard group corpus.
CheckResult check_gamma_group_agreement();

/// Ten validated homomorphisms among corpus groups extend to arc-preserving
/// vertex maps of the multigraphs.
CheckResult check_hom_extension();

/// Exponent p^3 and 2-step nilpotency over all graphs on <= max_n vertices,
/// p in {3,5}: x^{p^3} = e via repeated multiplication, [[x,y],z] = e, and
/// element_order(g_i) = p^3 exactly, with `samples` random draws total.
CheckResult check_exponent_nilpotency(int max_n = 4, int samples = 10000,
                                      uint64_t seed = 0);

/// Exact size accounting: |V| = m + m^3 for every corpus multigraph and
/// basis size n + n(n-1)/2 for every algebra on <= max_n vertices.  Appends
/// one SizeReport per input when reports is non-null.
CheckResult check_size_bounds(int max_n = 4,
                              std::vector<SizeReport>* reports = nullptr);

/// Every relator of every exported presentation evaluates to the identity
/// (all graphs on <= max_n vertices, p in {3,5}).
CheckResult check_presentation_soundness(int max_n = 4);

/// Simultaneous similarity is an equivalence relation on `pairs` random
/// matrix pairs (n = 2, p = 3) with validated witnesses, plus fixed
/// negative cases, plus the central-span order bound >= p^3 for every
/// graph on 3..max_n vertices.
CheckResult check_similarity_and_center(int pairs = 50, int max_n = 4,
                                        uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Module-invariant checks.
// ---------------------------------------------------------------------------

/// Residue and mixed-vector arithmetic axioms, exhaustively at p = 3.
CheckResult check_modarith_axioms();

/// Graph oracle sanity: witness validity, permuted copies, the 11
/// isomorphism classes on 4 vertices, fixed non-isomorphic pairs.
CheckResult check_graph_oracles();

/// The multigraph-to-simple-graph encoding preserves isomorphism verdicts
/// against the multigraph oracle on a mixed corpus.
CheckResult check_encode_simple_oracle();

/// Additive orders, bilinearity, kind symmetry/antisymmetry, annihilation
/// and tag structure of graph algebras on <= max_n vertices.
CheckResult check_algebra_structure(int max_n = 4, uint64_t seed = 0);

/// induced_iso accepts exactly the edge-preserving vertex bijections, and
/// every accepted witness passes the multiplicativity check (exhaustive on
/// 3-vertex graph pairs, p in {3,5}).
CheckResult check_induced_iso_exhaustive();

/// Group axioms on random samples: associativity, identity, two-sided
/// inverse, the closed-form inverse against the p^3-1 power, closed-form
/// powers against iterated multiplication, and commutator centrality.
CheckResult check_group_axioms(int max_n = 4, int samples = 2000,
                               uint64_t seed = 0);

/// The exponent-vector map is a surjective module homomorphism onto
/// (Z/p^3Z)^n whose kernel is exactly the central span.
CheckResult check_alpha_quotient(int max_n = 4, int samples = 2000,
                                 uint64_t seed = 0);

/// Degree structure of the corpus multigraphs: triple degrees in {2,4}
/// (4 exactly at product triples), element degrees >= m^2, and strict
/// sort separation.
CheckResult check_gamma_degrees();

/// Extending a composition of homomorphisms equals composing extensions.
CheckResult check_hom_functoriality();

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

struct SuiteOptions {
  uint32_t p = 3;      // prime for the checks that take one
  int max_n = 4;       // graph-size ceiling (individual checks clamp)
  uint64_t seed = 0;   // base seed for all randomized corpora
};

/// Runs one of the named suites: "algebra" (arithmetic, graphs, algebra
/// checks), "group" (group law, transport, renewal, presentation,
/// similarity), "gamma" (multigraph functor checks), "sizes" (exact size
/// accounting) or "all".  Throws std::invalid_argument on unknown names.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opt = {});

}  // namespace hiso

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hiso/gamma.hpp"
#include "hiso/graph_iso.hpp"

using namespace hiso;

TEST_SUITE_BEGIN("gamma");

TEST_CASE("vertex layout and triple ids") {
  CayleyGroup z3 = CayleyGroup::cyclic(3);
  DiMultigraph m = build_gamma(z3);
  CHECK(m.element_count() == 3);
  CHECK(m.triple_count() == 27);
  CHECK(m.vertex_count() == 30);
  CHECK(m.sort_of(0) == DiMultigraph::Sort::element);
  CHECK(m.sort_of(2) == DiMultigraph::Sort::element);
  CHECK(m.sort_of(3) == DiMultigraph::Sort::triple);
  CHECK(gamma_triple_id(z3, 0, 0, 0) == 3);
  CHECK(gamma_triple_id(z3, 0, 1, 1) == 3 + 1 * 3 + 1);
  CHECK(gamma_triple_id(z3, 2, 2, 2) == 29);
  CHECK_THROWS_AS(gamma_triple_id(z3, 0, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(gamma_triple_id(z3, -1, 0, 0), std::out_of_range);
}

TEST_CASE("small groups are rejected") {
  CHECK_THROWS_AS(build_gamma(CayleyGroup::cyclic(2)), std::invalid_argument);
  CayleyGroup z2 = CayleyGroup::cyclic(2);
  CHECK_THROWS_AS(gamma_triple_id(z2, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("arc multiplicities encode the multiplication table") {
  CayleyGroup z3 = CayleyGroup::cyclic(3);
  DiMultigraph m = build_gamma(z3);

  // 0 * 1 = 1: incoming 1 from u, 2 from v, product arc out.
  int t = gamma_triple_id(z3, 0, 1, 1);
  CHECK(m.multiplicity(0, t) == 1);
  CHECK(m.multiplicity(1, t) == 2);
  CHECK(m.multiplicity(t, 1) == 1);
  CHECK(m.weighted_degree(t) == 4);

  // 0 * 1 != 2: both unit arcs, no product arc.
  t = gamma_triple_id(z3, 0, 1, 2);
  CHECK(m.multiplicity(0, t) == 1);
  CHECK(m.multiplicity(1, t) == 1);
  CHECK(m.multiplicity(t, 2) == 0);
  CHECK(m.weighted_degree(t) == 2);

  // 1 * 1 = 2: the u and v arcs coincide and merge to 3.
  t = gamma_triple_id(z3, 1, 1, 2);
  CHECK(m.multiplicity(1, t) == 3);
  CHECK(m.multiplicity(t, 2) == 1);
  CHECK(m.weighted_degree(t) == 4);

  // 1 * 1 != 0: merged unit arcs only.
  t = gamma_triple_id(z3, 1, 1, 0);
  CHECK(m.multiplicity(1, t) == 2);
  CHECK(m.weighted_degree(t) == 2);

  // Element degrees: every element vertex carries 2m^2 + 2m.
  for (int v = 0; v < 3; ++v) {
    CHECK(m.weighted_degree(v) == 2 * 9 + 2 * 3);
  }
}

TEST_CASE("homomorphisms extend to arc-preserving vertex maps") {
  CayleyGroup z6 = CayleyGroup::cyclic(6);
  CayleyGroup z3 = CayleyGroup::cyclic(3);
  std::vector<int> h{0, 1, 2, 0, 1, 2};
  std::vector<int> f = extend_homomorphism(h, z6, z3);
  DiMultigraph m1 = build_gamma(z6);
  DiMultigraph m2 = build_gamma(z3);
  CHECK(static_cast<int>(f.size()) == m1.vertex_count());
  for (int x = 0; x < 6; ++x) CHECK(f[x] == h[x]);
  CHECK(f[gamma_triple_id(z6, 1, 2, 3)] == gamma_triple_id(z3, 1, 2, 0));
  CHECK(arcs_preserved(f, m1, m2));

  // Sorts are preserved by construction.
  for (int v = 0; v < m1.vertex_count(); ++v) {
    CHECK(m1.sort_of(v) == m2.sort_of(f[v]));
  }

  // A non-homomorphism is rejected up front.
  std::vector<int> bad{0, 1, 2, 0, 1, 1};
  CHECK_THROWS_AS(extend_homomorphism(bad, z6, z3), std::invalid_argument);
  CHECK_THROWS_AS(extend_homomorphism({0, 0, 0}, z6, z3), std::invalid_argument);
  CHECK_THROWS_AS(extend_homomorphism({0, 5, 4, 3, 2, 1}, z6, z3),
                  std::invalid_argument);
}

TEST_CASE("arc preservation detects broken maps") {
  CayleyGroup z3 = CayleyGroup::cyclic(3);
  DiMultigraph m = build_gamma(z3);
  std::vector<int> id = extend_homomorphism({0, 1, 2}, z3, z3);
  CHECK(arcs_preserved(id, m, m));

  // Collapsing every vertex onto element 0 kills the product arcs
  // t -> w for w != 0 (0 has no arc to itself).
  std::vector<int> collapse(m.vertex_count(), 0);
  CHECK_FALSE(arcs_preserved(collapse, m, m));

  // Swapping two triple vertices misroutes their incoming arcs.
  std::vector<int> swapped = id;
  std::swap(swapped[gamma_triple_id(z3, 0, 1, 1)],
            swapped[gamma_triple_id(z3, 0, 1, 2)]);
  CHECK_FALSE(arcs_preserved(swapped, m, m));
}

TEST_CASE("multigraph comparison decides group isomorphism") {
  CayleyGroup z4 = CayleyGroup::cyclic(4);
  CayleyGroup klein = CayleyGroup::direct_product(CayleyGroup::cyclic(2),
                                                  CayleyGroup::cyclic(2));
  CayleyGroup z6 = CayleyGroup::cyclic(6);
  CayleyGroup s3 = CayleyGroup::symmetric3();
  CayleyGroup z2z3 = CayleyGroup::direct_product(CayleyGroup::cyclic(2),
                                                 CayleyGroup::cyclic(3));

  CHECK(gamma_iso_check(z4, z4));
  CHECK_FALSE(gamma_iso_check(z4, klein));
  CHECK_FALSE(gamma_iso_check(z6, s3));
  CHECK(gamma_iso_check(z6, z2z3));
  CHECK(gamma_iso_check(s3, CayleyGroup::dihedral(3)));
  CHECK(gamma_iso_check(z4, z4.relabeled({1, 2, 3, 0})));
  CHECK_FALSE(gamma_iso_check(z4, z6));

  CHECK_THROWS_AS(gamma_iso_check(CayleyGroup::cyclic(9), CayleyGroup::cyclic(9)),
                  std::invalid_argument);
}

TEST_SUITE_END();

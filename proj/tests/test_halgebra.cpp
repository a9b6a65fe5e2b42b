#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "hiso/graph_iso.hpp"
#include "hiso/halgebra.hpp"
#include "hiso/rng.hpp"

using namespace hiso;

namespace {

Graph k2() {
  Graph g(2);
  g.add_edge(0, 1);
  return g;
}

Graph path3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("halgebra");

TEST_CASE("generators and pair tags") {
  HAlgebra a = HAlgebra::h_algebra(path3(), Prime(3));
  CHECK(a.prime().value() == 3);
  CHECK(a.generator_count() == 3);
  CHECK(a.kind() == AlgebraKind::lie);
  CHECK(a.pair_count() == 3);
  CHECK(a.pair_at(0) == std::pair<int, int>{0, 1});
  CHECK(a.pair_at(1) == std::pair<int, int>{0, 2});
  CHECK(a.pair_at(2) == std::pair<int, int>{1, 2});
  CHECK(a.pair_index(0, 1) == 0);
  CHECK(a.pair_index(2, 1) == 2);  // unordered
  CHECK_THROWS_AS(a.pair_index(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(a.pair_index(0, 3), std::invalid_argument);
  CHECK(a.pair_is_edge(0));
  CHECK_FALSE(a.pair_is_edge(1));
  CHECK(a.pair_is_edge(2));
  CHECK(a.tag_graph() == path3());

  // Edge pairs carry modulus p, non-edge pairs p^2, vertices p^3.
  CHECK(a.central_profile()->modulus(0) == 3);
  CHECK(a.central_profile()->modulus(1) == 9);
  CHECK(a.central_profile()->modulus(2) == 3);
  CHECK(a.vertex_profile()->modulus(0) == 27);

  CHECK(a.vertex_gen(1).vpart.value(1) == 1);
  CHECK(a.vertex_gen(1).vpart.value(0) == 0);
  CHECK(a.vertex_gen(1).apart.is_zero());
  CHECK(a.pair_gen(2).apart.value(2) == 1);
  CHECK(a.pair_gen(2).vpart.is_zero());
  CHECK(a.zero().vpart.is_zero());
}

TEST_CASE("products follow the kind") {
  Prime p(3);
  HAlgebra lie = HAlgebra::h_algebra(k2(), p);
  HAlgebra com = HAlgebra::graph_algebra(k2(), p);
  CHECK(lie.kind() == AlgebraKind::lie);
  CHECK(com.kind() == AlgebraKind::commutative);

  // v1 * v2 is the unit pair generator either way.
  CHECK(lie.basis_product(0, 1).value(0) == 1);
  CHECK(com.basis_product(0, 1).value(0) == 1);
  // Reversed order flips the sign only for the bracket.
  CHECK(lie.basis_product(1, 0).value(0) == 2);
  CHECK(com.basis_product(1, 0).value(0) == 1);
  // Squares vanish: the diagonal resolves to the zero a-span vector.
  CHECK(lie.basis_product(0, 0).is_zero());
  CHECK(com.basis_product(1, 1).is_zero());

  AlgebraElement x = lie.vertex_gen(0);
  AlgebraElement y = lie.vertex_gen(1);
  CHECK(lie.multiply(x, x) == lie.zero());
  CHECK(lie.multiply(x, y) == lie.pair_gen(0));
  CHECK(lie.multiply(y, x) + lie.pair_gen(0) == lie.zero());
  CHECK(com.multiply(lie.vertex_gen(1), lie.vertex_gen(0)) == com.pair_gen(0));

  // The a-span annihilates everything; products of products vanish.
  CHECK(lie.multiply(lie.pair_gen(0), x) == lie.zero());
  CHECK(lie.multiply(x, lie.pair_gen(0)) == lie.zero());
  CHECK(lie.multiply(lie.multiply(x, y), y) == lie.zero());
}

TEST_CASE("bilinearity on random elements") {
  HAlgebra a = HAlgebra::h_algebra(path3(), Prime(5));
  RandomSource rng(11);
  for (int s = 0; s < 50; ++s) {
    AlgebraElement x = a.random_element(rng);
    AlgebraElement y = a.random_element(rng);
    AlgebraElement z = a.random_element(rng);
    CHECK(a.multiply(x + y, z) == a.multiply(x, z) + a.multiply(y, z));
    CHECK(a.multiply(x, y + z) == a.multiply(x, y) + a.multiply(x, z));
    CHECK(a.multiply(x, y) + a.multiply(y, x) == a.zero());
  }
}

TEST_CASE("from_table validation") {
  Prime p(3);
  HAlgebra base = HAlgebra::h_algebra(k2(), p);
  std::vector<MixedVector> vv{base.table_entry(0)};
  CHECK_THROWS_AS(HAlgebra::from_table(p, 2, AlgebraKind::lie, {true, true}, vv),
                  std::invalid_argument);  // tag list length != pair count
  CHECK_THROWS_AS(HAlgebra::from_table(p, 2, AlgebraKind::lie, {true}, {}),
                  std::invalid_argument);  // table length != pair count
  HAlgebra rebuilt =
      HAlgebra::from_table(p, 2, AlgebraKind::lie, {true}, vv);
  CHECK(rebuilt.table_entry(0) == base.table_entry(0));
  CHECK(rebuilt.same_shape(base));
}

TEST_CASE("induced isomorphisms accept exactly tag-preserving maps") {
  Prime p(3);
  HAlgebra a1 = HAlgebra::h_algebra(path3(), p);
  Graph q(3);  // path relabeled: center is vertex 0
  q.add_edge(0, 1);
  q.add_edge(0, 2);
  HAlgebra a2 = HAlgebra::h_algebra(q, p);

  CHECK_FALSE(induced_iso(VertexBijection::identity(3), a1, a2));
  auto f = induced_iso(VertexBijection{{1, 0, 2}}, a1, a2);
  REQUIRE(f.has_value());
  CHECK(check_iso_witness(*f, a1, a2));
  CHECK_FALSE(check_iso_witness(AlgebraIso{VertexBijection::identity(3)}, a1, a2));

  CHECK_THROWS_AS(induced_iso(VertexBijection::identity(2), a1, a2),
                  std::invalid_argument);
  HAlgebra a5 = HAlgebra::h_algebra(path3(), Prime(5));
  CHECK_THROWS_AS(induced_iso(VertexBijection::identity(3), a1, a5),
                  std::invalid_argument);
  HAlgebra com = HAlgebra::graph_algebra(path3(), p);
  CHECK_THROWS_AS(induced_iso(VertexBijection::identity(3), a1, com),
                  std::invalid_argument);
}

TEST_CASE("apply_iso flips reversed pairs in the lie kind") {
  HAlgebra a = HAlgebra::h_algebra(k2(), Prime(3));
  AlgebraIso swap{VertexBijection{{1, 0}}};
  REQUIRE(check_iso_witness(swap, a, a));
  AlgebraElement img = apply_iso(swap, a, a, a.pair_gen(0));
  CHECK(img.apart.value(0) == 2);  // a12 -> [v2, v1] = -a12
  CHECK(apply_iso(swap, a, a, a.vertex_gen(0)) == a.vertex_gen(1));
}

TEST_CASE("change_basis with the identity keeps the table") {
  HAlgebra a = HAlgebra::h_algebra(path3(), Prime(3));
  ModMatrix id = ModMatrix::identity(3, 27);
  std::vector<MixedVector> central;
  for (int q = 0; q < a.pair_count(); ++q) {
    MixedVector u(a.central_profile());
    u.set(q, 1);
    central.push_back(u);
  }
  HAlgebra same = change_basis(a, id, central);
  for (int q = 0; q < a.pair_count(); ++q) {
    CHECK(same.table_entry(q) == a.table_entry(q));
  }

  ModMatrix bad(3, 3, 27);  // all zero: not invertible
  CHECK_THROWS_AS(change_basis(a, bad, central), std::invalid_argument);
  ModMatrix small = ModMatrix::identity(2, 27);
  CHECK_THROWS_AS(change_basis(a, small, central), std::invalid_argument);
  CHECK_THROWS_AS(change_basis(a, id, {}), std::invalid_argument);
}

TEST_CASE("scramble is deterministic and recoverable") {
  Prime p(3);
  for (const Graph& g : {k2(), path3()}) {
    HAlgebra a = HAlgebra::h_algebra(g, p);
    HAlgebra s1 = scramble_basis(a, 7);
    HAlgebra s2 = scramble_basis(a, 7);
    for (int q = 0; q < a.pair_count(); ++q) {
      CHECK(s1.table_entry(q) == s2.table_entry(q));
    }
    CHECK(s1.same_shape(a));

    auto rec = recover_graph(s1);
    REQUIRE(rec.has_value());
    CHECK(graph_iso(*rec, g).has_value());
  }
  CHECK_THROWS_AS(scramble_basis(HAlgebra::graph_algebra(k2(), p), 1),
                  std::invalid_argument);
}

TEST_CASE("recovery guards") {
  Prime p(3);
  HAlgebra a = HAlgebra::h_algebra(Graph(4), p);
  CHECK_THROWS_AS(recover_graph(a), std::invalid_argument);  // above the cap
  auto rec = recover_graph(a, 4);
  REQUIRE(rec.has_value());
  CHECK(*rec == Graph(4));
  CHECK_THROWS_AS(recover_graph(HAlgebra::graph_algebra(k2(), p)),
                  std::invalid_argument);
}

TEST_CASE("unscrambled algebras recover their own graph") {
  Prime p(3);
  HAlgebra a = HAlgebra::h_algebra(path3(), p);
  auto rec = recover_graph(a);
  REQUIRE(rec.has_value());
  CHECK(*rec == path3());  // identity basis is tried first
}

TEST_CASE("text dump") {
  HAlgebra a = HAlgebra::h_algebra(k2(), Prime(3));
  CHECK(algebra_to_text(a) == "3 2 lie\n1 2 edge\nv_1 * v_2 = 1 * a_12\n");
  HAlgebra e = HAlgebra::h_algebra(Graph(2), Prime(3));
  CHECK(algebra_to_text(e) == "3 2 lie\n1 2 nonedge\nv_1 * v_2 = 1 * a_12\n");
}

TEST_SUITE_END();

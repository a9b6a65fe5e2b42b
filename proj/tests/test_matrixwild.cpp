#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "hiso/matrixwild.hpp"

using namespace hiso;

namespace {

ModMatrix make(int n, uint32_t m, std::vector<uint32_t> entries) {
  ModMatrix a(n, n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a.set(i, j, entries[static_cast<size_t>(i) * n + j]);
  }
  return a;
}

}  // namespace

TEST_SUITE_BEGIN("matrixwild");

TEST_CASE("matrix basics") {
  ModMatrix a(2, 3, 5);
  CHECK(a.rows == 2);
  CHECK(a.cols == 3);
  CHECK(a.at(1, 2) == 0);
  a.set(1, 2, 13);
  CHECK(a.at(1, 2) == 3);  // reduced mod 5
  CHECK_THROWS_AS(ModMatrix(-1, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(ModMatrix(2, 2, 0), std::invalid_argument);

  ModMatrix id = ModMatrix::identity(3, 7);
  CHECK(id.at(0, 0) == 1);
  CHECK(id.at(0, 1) == 0);
  CHECK(ModMatrix::identity(2, 1).at(0, 0) == 0);  // 1 mod 1

  CHECK(make(2, 5, {1, 2, 3, 4}) == make(2, 5, {1, 2, 3, 4}));
  CHECK_FALSE(make(2, 5, {1, 2, 3, 4}) == make(2, 5, {1, 2, 3, 0}));
  CHECK_FALSE(make(2, 5, {1, 2, 3, 4}) == make(2, 7, {1, 2, 3, 4}));
}

TEST_CASE("products, determinants and inverses") {
  ModMatrix a = make(2, 5, {1, 2, 3, 4});
  ModMatrix swap = make(2, 5, {0, 1, 1, 0});
  CHECK(mat_mul(a, swap) == make(2, 5, {2, 1, 4, 3}));
  CHECK(mat_mul(swap, a) == make(2, 5, {3, 4, 1, 2}));
  CHECK_THROWS_AS(mat_mul(a, ModMatrix(3, 3, 5)), std::invalid_argument);
  CHECK_THROWS_AS(mat_mul(a, make(2, 7, {1, 0, 0, 1})), std::invalid_argument);

  CHECK(det_mod_p(a, 5) == 3);  // 4 - 6 = -2
  CHECK(det_mod_p(make(2, 5, {1, 2, 2, 4}), 5) == 0);
  CHECK(det_mod_p(ModMatrix::identity(3, 3), 3) == 1);
  CHECK_THROWS_AS(det_mod_p(ModMatrix(2, 3, 5), 5), std::invalid_argument);

  CHECK(invertible_mod_p(a, 5));
  CHECK_FALSE(invertible_mod_p(make(2, 5, {1, 2, 2, 4}), 5));
  // Entries are reduced mod p before deciding: 3 = 0 mod 3.
  CHECK_FALSE(invertible_mod_p(make(2, 9, {3, 0, 0, 1}), 3));

  ModMatrix inv = inverse_mod_p(a, 5);
  CHECK(mat_mul(a, inv) == ModMatrix::identity(2, 5));
  CHECK(mat_mul(inv, a) == ModMatrix::identity(2, 5));
  CHECK_THROWS_AS(inverse_mod_p(make(2, 5, {1, 2, 2, 4}), 5), std::invalid_argument);
}

TEST_CASE("invertible enumeration order and counts") {
  // |GL(2, 2)| = 6, |GL(2, 3)| = 48, |GL(1, 3)| = 2.
  for (auto [n, p, total] : std::vector<std::tuple<int, uint32_t, int>>{
           {2, 2, 6}, {2, 3, 48}, {1, 3, 2}}) {
    int count = 0;
    bool stopped = for_each_invertible(n, p, [&](const ModMatrix& s) {
      CHECK(invertible_mod_p(s, p));
      ++count;
      return false;
    });
    CHECK_FALSE(stopped);
    CHECK(count == total);
  }

  // identity_first visits the identity once, up front.
  std::vector<ModMatrix> seen;
  for_each_invertible(2, 2, [&](const ModMatrix& s) {
    seen.push_back(s);
    return false;
  });
  CHECK(seen.size() == 6);
  CHECK(seen[0] == ModMatrix::identity(2, 2));
  CHECK(seen[1] == make(2, 2, {0, 1, 1, 0}));  // first in pure lex order

  std::vector<ModMatrix> lex;
  for_each_invertible(
      2, 2,
      [&](const ModMatrix& s) {
        lex.push_back(s);
        return false;
      },
      /*identity_first=*/false);
  CHECK(lex.size() == 6);
  CHECK(lex[0] == make(2, 2, {0, 1, 1, 0}));

  // Early stop reports true and visits nothing further.
  int visits = 0;
  bool stopped = for_each_invertible(2, 3, [&](const ModMatrix&) {
    ++visits;
    return true;
  });
  CHECK(stopped);
  CHECK(visits == 1);
}

TEST_CASE("matrix text round trip") {
  ModMatrix a = make(2, 3, {1, 2, 0, 1});
  CHECK(matrix_to_text(a) == "2 3\n1 2\n0 1\n");
  CHECK(parse_matrix(matrix_to_text(a)) == a);
  CHECK(parse_matrix("  \n2 3\n 1 2 \n0 1\n\n") == a);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 3\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 3\n1 x\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 3\n1 -2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 4\n1 2\n0 1\n"), std::invalid_argument);
}

TEST_CASE("simultaneous similarity by brute force") {
  Prime p(3);
  ModMatrix a1 = make(2, 3, {0, 1, 0, 0});
  ModMatrix b1 = make(2, 3, {0, 0, 1, 0});
  // Conjugates of (a1, b1) by S = [[1,1],[0,1]].
  ModMatrix a2 = make(2, 3, {0, 1, 0, 0});
  ModMatrix b2 = make(2, 3, {1, 2, 1, 2});
  auto s = simsim({a1, b1}, {a2, b2}, p);
  REQUIRE(s.has_value());
  CHECK(invertible_mod_p(*s, 3));
  CHECK(mat_mul(*s, a1) == mat_mul(a2, *s));
  CHECK(mat_mul(*s, b1) == mat_mul(b2, *s));

  // Deterministic witness: the search is pure lexicographic, so the zero
  // pair is matched to itself by the first invertible matrix in lex order.
  ModMatrix zero(2, 2, 3);
  auto w1 = simsim({zero, zero}, {zero, zero}, p);
  auto w2 = simsim({zero, zero}, {zero, zero}, p);
  REQUIRE(w1.has_value());
  CHECK(*w1 == *w2);
  CHECK(*w1 == make(2, 3, {0, 1, 1, 0}));

  // No change of basis maps the zero matrix to the identity.
  ModMatrix id = ModMatrix::identity(2, 3);
  CHECK_FALSE(simsim({id, zero}, {id, id}, p).has_value());
  // Different eigenvalue multisets cannot be similar.
  CHECK_FALSE(simsim({make(2, 3, {1, 0, 0, 2}), zero}, {id, zero}, p).has_value());

  CHECK_THROWS_AS(simsim({ModMatrix(4, 4, 3), ModMatrix(4, 4, 3)},
                         {ModMatrix(4, 4, 3), ModMatrix(4, 4, 3)}, p),
                  std::invalid_argument);
  CHECK_THROWS_AS(simsim({ModMatrix(2, 2, 5), ModMatrix(2, 2, 5)},
                         {ModMatrix(2, 2, 5), ModMatrix(2, 2, 5)}, Prime(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(simsim({zero, ModMatrix(3, 3, 3)}, {zero, zero}, p),
                  std::invalid_argument);
  CHECK_THROWS_AS(simsim({ModMatrix(2, 2, 9), ModMatrix(2, 2, 9)},
                         {ModMatrix(2, 2, 9), ModMatrix(2, 2, 9)}, p),
                  std::invalid_argument);
}

TEST_CASE("center order of a graph group") {
  auto group_of = [](Graph g, uint32_t p) {
    return HGroup(HAlgebra::h_algebra(g, Prime(p)));
  };
  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(0, 2);
  k3.add_edge(1, 2);
  CHECK(center_order_bound(group_of(k3, 3)) == 27);

  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(center_order_bound(group_of(path, 3)) == 3 * 3 * 9);
  CHECK(center_order_bound(group_of(Graph(3), 3)) == 729);
  CHECK(center_order_bound(group_of(Graph(3), 5)) == 25 * 25 * 25);

  CHECK_THROWS_AS(center_order_bound(group_of(Graph(2), 3)), std::invalid_argument);
  CHECK_THROWS_AS(center_order_bound(group_of(Graph(7), 997)), std::overflow_error);
}

TEST_SUITE_END();

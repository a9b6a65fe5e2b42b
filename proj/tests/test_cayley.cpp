#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "hiso/cayley.hpp"
#include "hiso/graph.hpp"

using namespace hiso;

TEST_SUITE_BEGIN("cayley");

TEST_CASE("table validation") {
  CHECK_THROWS_AS(CayleyGroup::from_table({{0, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGroup::from_table({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGroup::from_table({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGroup::from_table({{0, 1}, {1, 0}, {0, 1}}),
                  std::invalid_argument);  // not square
  CHECK_THROWS_AS(CayleyGroup::from_table({}), std::invalid_argument);

  // Valid: Z2 with swapped labels (identity is element 1).
  CayleyGroup g = CayleyGroup::from_table({{1, 0}, {0, 1}});
  CHECK(g.identity() == 1);
  CHECK(g.inverse(0) == 0);

  // A latin square that is not associative must be rejected.
  // (5-element quasigroup: x * y = 2x + y mod 5 has no associativity.)
  std::vector<std::vector<int>> quasi(5, std::vector<int>(5));
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) quasi[x][y] = (2 * x + y) % 5;
  }
  CHECK_THROWS_AS(CayleyGroup::from_table(quasi), std::invalid_argument);
}

TEST_CASE("standard constructions") {
  CayleyGroup z5 = CayleyGroup::cyclic(5);
  CHECK(z5.order() == 5);
  CHECK(z5.op(3, 4) == 2);
  CHECK(z5.identity() == 0);
  CHECK(z5.inverse(2) == 3);
  CHECK(z5.element_order(1) == 5);
  CHECK(z5.element_order(0) == 1);

  CayleyGroup v4 = CayleyGroup::direct_product(CayleyGroup::cyclic(2),
                                               CayleyGroup::cyclic(2));
  CHECK(v4.order() == 4);
  for (int x = 0; x < 4; ++x) CHECK(v4.op(x, x) == 0);

  CayleyGroup s3 = CayleyGroup::symmetric3();
  CHECK(s3.order() == 6);
  std::multiset<int> orders;
  for (int x = 0; x < 6; ++x) orders.insert(s3.element_order(x));
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
  bool abelian = true;
  for (int x = 0; x < 6 && abelian; ++x) {
    for (int y = 0; y < 6; ++y) {
      if (s3.op(x, y) != s3.op(y, x)) {
        abelian = false;
        break;
      }
    }
  }
  CHECK_FALSE(abelian);

  CayleyGroup d4 = CayleyGroup::dihedral(4);
  CHECK(d4.order() == 8);
  std::multiset<int> d4_orders;
  for (int x = 0; x < 8; ++x) d4_orders.insert(d4.element_order(x));
  CHECK(d4_orders == std::multiset<int>{1, 2, 2, 2, 2, 2, 4, 4});

  CayleyGroup q8 = CayleyGroup::quaternion8();
  CHECK(q8.order() == 8);
  std::multiset<int> q8_orders;
  for (int x = 0; x < 8; ++x) q8_orders.insert(q8.element_order(x));
  CHECK(q8_orders == std::multiset<int>{1, 2, 4, 4, 4, 4, 4, 4});

  CHECK_THROWS_AS(CayleyGroup::cyclic(0), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGroup::dihedral(0), std::invalid_argument);
}

TEST_CASE("relabeling") {
  CayleyGroup z4 = CayleyGroup::cyclic(4);
  CayleyGroup moved = z4.relabeled({3, 2, 1, 0});
  CHECK(moved.identity() == 3);
  CHECK(group_iso_small(z4, moved).has_value());
  CHECK_THROWS_AS(z4.relabeled({0, 0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(z4.relabeled({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("text round trip") {
  CayleyGroup s3 = CayleyGroup::symmetric3();
  CHECK(CayleyGroup::parse(s3.to_text()).table() == s3.table());
  CHECK(CayleyGroup::parse("1\n1\n").order() == 1);

  CHECK_THROWS_AS(CayleyGroup::parse(""), ParseError);
  CHECK_THROWS_AS(CayleyGroup::parse("2\n1 2\n"), ParseError);      // missing row
  CHECK_THROWS_AS(CayleyGroup::parse("2\n1 2 1\n2 1 2\n"), ParseError);  // row too long
  CHECK_THROWS_AS(CayleyGroup::parse("2\n1 3\n2 1\n"), ParseError);  // entry range
  CHECK_THROWS_AS(CayleyGroup::parse("2\n1 1\n1 1\n"), ParseError);  // not a group
}

TEST_CASE("homomorphism predicate") {
  CayleyGroup z6 = CayleyGroup::cyclic(6);
  CayleyGroup z3 = CayleyGroup::cyclic(3);
  std::vector<int> red{0, 1, 2, 0, 1, 2};
  CHECK(is_homomorphism(red, z6, z3));
  std::vector<int> broken{0, 1, 2, 0, 1, 1};
  CHECK_FALSE(is_homomorphism(broken, z6, z3));
  CHECK_FALSE(is_homomorphism({0, 1, 2}, z6, z3));    // wrong length
  CHECK_FALSE(is_homomorphism({0, 1, 2, 0, 1, 3}, z6, z3));  // out of range
}

TEST_CASE("small-order isomorphism oracle") {
  CayleyGroup z4 = CayleyGroup::cyclic(4);
  CayleyGroup klein = CayleyGroup::direct_product(CayleyGroup::cyclic(2),
                                                  CayleyGroup::cyclic(2));
  CHECK_FALSE(group_iso_small(z4, klein));
  CHECK_FALSE(group_iso_small(CayleyGroup::cyclic(6), CayleyGroup::symmetric3()));
  CHECK_FALSE(group_iso_small(CayleyGroup::cyclic(3), CayleyGroup::cyclic(4)));

  // The five groups of order 8 are pairwise non-isomorphic.
  std::vector<CayleyGroup> order8{
      CayleyGroup::cyclic(8),
      CayleyGroup::direct_product(CayleyGroup::cyclic(2), CayleyGroup::cyclic(4)),
      CayleyGroup::direct_product(
          CayleyGroup::cyclic(2),
          CayleyGroup::direct_product(CayleyGroup::cyclic(2), CayleyGroup::cyclic(2))),
      CayleyGroup::dihedral(4),
      CayleyGroup::quaternion8(),
  };
  for (size_t i = 0; i < order8.size(); ++i) {
    for (size_t j = 0; j < order8.size(); ++j) {
      auto w = group_iso_small(order8[i], order8[j]);
      CHECK(w.has_value() == (i == j));
      if (w) {
        for (int x = 0; x < 8; ++x) {
          for (int y = 0; y < 8; ++y) {
            CHECK((*w)[order8[i].op(x, y)] == order8[j].op((*w)[x], (*w)[y]));
          }
        }
      }
    }
  }

  CayleyGroup d4moved = CayleyGroup::dihedral(4).relabeled({4, 5, 6, 7, 0, 1, 2, 3});
  auto w = group_iso_small(CayleyGroup::dihedral(4), d4moved);
  REQUIRE(w.has_value());

  CayleyGroup z17 = CayleyGroup::cyclic(17);
  CHECK_THROWS_AS(group_iso_small(z17, z17), std::invalid_argument);
}

TEST_CASE("standard corpus") {
  auto corpus = standard_group_corpus();
  CHECK(corpus.size() == 12);
  std::set<std::string> names;
  int iso_classes = 0;
  for (const auto& [name, g] : corpus) {
    CHECK(g.order() >= 3);
    CHECK(g.order() <= 8);
    names.insert(name);
  }
  CHECK(names.size() == 12);
  for (size_t i = 0; i < corpus.size(); ++i) {
    bool fresh = true;
    for (size_t j = 0; j < i; ++j) {
      if (group_iso_small(corpus[j].second, corpus[i].second)) fresh = false;
    }
    if (fresh) ++iso_classes;
  }
  CHECK(iso_classes == 12);  // pairwise non-isomorphic by construction
}

TEST_SUITE_END();

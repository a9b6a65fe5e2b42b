#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "hiso/graph.hpp"
#include "hiso/graph_iso.hpp"

using namespace hiso;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    g.add_edge(std::min(i, j), std::max(i, j));
  }
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("graphs");

TEST_CASE("vertex bijections") {
  VertexBijection id = VertexBijection::identity(4);
  CHECK(id.size() == 4);
  CHECK(id(2) == 2);
  CHECK(id.is_bijection());
  CHECK(id.inverse() == id);

  VertexBijection b{{2, 0, 1}};
  CHECK(b.is_bijection());
  CHECK(b.inverse().forward == std::vector<int>{1, 2, 0});
  CHECK(compose(b.inverse(), b) == VertexBijection::identity(3));
  CHECK(compose(b, b.inverse()) == VertexBijection::identity(3));

  VertexBijection c{{1, 0, 2}};
  // (b . c)(i) = b(c(i)).
  CHECK(compose(b, c).forward == std::vector<int>{0, 2, 1});

  CHECK_FALSE(VertexBijection{{0, 0, 1}}.is_bijection());
  CHECK_FALSE(VertexBijection{{0, 3, 1}}.is_bijection());
}

TEST_CASE("graph construction rejects bad edges") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);  // loop
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);  // duplicate, reversed
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);
  CHECK(g.edge_count() == 1);
  CHECK(g.neighbors(0) == std::vector<int>{1});
}

TEST_CASE("graph text round trip") {
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  std::string text = g.to_text();
  CHECK(text == "4\n1 3\n2 4\n");
  CHECK(Graph::parse(text) == g);
  CHECK(Graph::parse("1\n").vertex_count() == 1);

  CHECK_THROWS_AS(Graph::parse(""), ParseError);
  CHECK_THROWS_AS(Graph::parse("x\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse("2\n2 1\n"), ParseError);   // needs i < j
  CHECK_THROWS_AS(Graph::parse("2\n1 1\n"), ParseError);   // loop
  CHECK_THROWS_AS(Graph::parse("2\n1 3\n"), ParseError);   // out of range
  CHECK_THROWS_AS(Graph::parse("2\n1\n"), ParseError);     // missing endpoint
  CHECK_THROWS_AS(Graph::parse("2\n1 2\n1 2\n"), ParseError);  // duplicate
}

TEST_CASE("witness predicate") {
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  Graph q3(3);
  q3.add_edge(0, 1);
  q3.add_edge(0, 2);

  CHECK(is_graph_iso_witness(VertexBijection{{1, 0, 2}}, p3, q3));
  CHECK_FALSE(is_graph_iso_witness(VertexBijection::identity(3), p3, q3));
  CHECK_FALSE(is_graph_iso_witness(VertexBijection{{0, 0, 1}}, p3, q3));
  CHECK_FALSE(is_graph_iso_witness(VertexBijection::identity(2), p3, q3));
}

TEST_CASE("graph isomorphism verdicts") {
  CHECK_FALSE(graph_iso(complete(3), Graph::parse("3\n1 2\n2 3\n")));
  CHECK_FALSE(graph_iso(cycle(6), Graph::parse("6\n1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n")));
  CHECK_FALSE(graph_iso(Graph::parse("4\n1 2\n1 3\n1 4\n"),
                        Graph::parse("4\n1 2\n1 3\n2 3\n")));
  CHECK_FALSE(graph_iso(Graph(3), Graph(4)));

  Graph c4a = Graph::parse("4\n1 2\n2 3\n3 4\n1 4\n");
  Graph c4b = Graph::parse("4\n1 3\n2 3\n2 4\n1 4\n");
  auto w = graph_iso(c4a, c4b);
  REQUIRE(w.has_value());
  CHECK(is_graph_iso_witness(*w, c4a, c4b));

  auto self = graph_iso(cycle(5), cycle(5));
  REQUIRE(self.has_value());
  CHECK(is_graph_iso_witness(*self, cycle(5), cycle(5)));

  // Deterministic: equal inputs give the same witness.
  CHECK(graph_iso(c4a, c4b)->forward == w->forward);
}

TEST_CASE("multigraph arcs merge") {
  DiMultigraph m(2, 1);
  CHECK(m.vertex_count() == 3);
  CHECK(m.element_count() == 2);
  CHECK(m.triple_count() == 1);
  CHECK(m.sort_of(0) == DiMultigraph::Sort::element);
  CHECK(m.sort_of(2) == DiMultigraph::Sort::triple);

  m.add_arc(0, 2, 1);
  m.add_arc(0, 2, 2);  // merges with the first
  m.add_arc(2, 1, 1);
  CHECK(m.multiplicity(0, 2) == 3);
  CHECK(m.multiplicity(2, 0) == 0);
  CHECK(m.arc_entry_count() == 2);
  CHECK(m.weighted_degree(0) == 3);
  CHECK(m.weighted_degree(1) == 1);
  CHECK(m.weighted_degree(2) == 4);
  CHECK(m.out(0) == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(m.in(1) == std::vector<std::pair<int, int>>{{2, 1}});

  CHECK_THROWS_AS(m.add_arc(0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(m.add_arc(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(m.add_arc(-1, 0, 1), std::invalid_argument);
}

TEST_CASE("multigraph text round trip") {
  DiMultigraph m(2, 1);
  m.add_arc(0, 2, 1);
  m.add_arc(1, 2, 2);
  m.add_arc(2, 0, 1);
  std::string text = m.to_text();
  CHECK(text == "2 1\ne1 t1 1\ne2 t1 2\nt1 e1 1\n");
  CHECK(DiMultigraph::parse(text) == m);

  CHECK_THROWS_AS(DiMultigraph::parse(""), ParseError);
  CHECK_THROWS_AS(DiMultigraph::parse("2\n"), ParseError);
  CHECK_THROWS_AS(DiMultigraph::parse("2 1\nx1 t1 1\n"), ParseError);
  CHECK_THROWS_AS(DiMultigraph::parse("2 1\ne1 t2 1\n"), ParseError);
  CHECK_THROWS_AS(DiMultigraph::parse("2 1\ne1 t1 0\n"), ParseError);
  CHECK_THROWS_AS(DiMultigraph::parse("2 1\ne1 t1\n"), ParseError);
}

TEST_CASE("multigraph isomorphism is direction and multiplicity sensitive") {
  DiMultigraph m1(2, 1);
  m1.add_arc(0, 2, 1);
  m1.add_arc(1, 2, 2);
  m1.add_arc(2, 0, 1);

  DiMultigraph m2(2, 1);  // same shape with the two elements swapped
  m2.add_arc(1, 2, 1);
  m2.add_arc(0, 2, 2);
  m2.add_arc(2, 1, 1);

  auto w = multigraph_iso(m1, m2);
  REQUIRE(w.has_value());
  CHECK(is_multigraph_iso_witness(*w, m1, m2));
  CHECK(w->forward == std::vector<int>{1, 0, 2});

  auto self = multigraph_iso(m1, m1);
  REQUIRE(self.has_value());
  CHECK(*self == VertexBijection::identity(3));

  DiMultigraph m3(2, 1);  // multiplicity bumped
  m3.add_arc(0, 2, 3);
  m3.add_arc(1, 2, 2);
  m3.add_arc(2, 0, 1);
  CHECK_FALSE(multigraph_iso(m1, m3));

  DiMultigraph m4(2, 1);  // product arc reversed
  m4.add_arc(0, 2, 1);
  m4.add_arc(1, 2, 2);
  m4.add_arc(0, 2, 1);
  CHECK_FALSE(multigraph_iso(m1, m4));

  // Sorts must be preserved: same underlying arcs, different sort split.
  DiMultigraph m5(1, 2);
  m5.add_arc(0, 1, 1);
  DiMultigraph m6(2, 1);
  m6.add_arc(0, 2, 1);
  CHECK_FALSE(multigraph_iso(m5, m6));
  CHECK_FALSE(multigraph_iso(m1, DiMultigraph(2, 1)));
}

TEST_CASE("witness predicate for multigraphs") {
  DiMultigraph m1(2, 1);
  m1.add_arc(0, 2, 2);
  DiMultigraph m2(2, 1);
  m2.add_arc(1, 2, 2);
  CHECK(is_multigraph_iso_witness(VertexBijection{{1, 0, 2}}, m1, m2));
  CHECK_FALSE(is_multigraph_iso_witness(VertexBijection::identity(3), m1, m2));
  CHECK_FALSE(is_multigraph_iso_witness(VertexBijection::identity(2), m1, m2));
}

TEST_CASE("simple encoding preserves verdicts") {
  DiMultigraph m1(2, 1);
  m1.add_arc(0, 2, 1);
  m1.add_arc(1, 2, 2);
  m1.add_arc(2, 0, 1);
  DiMultigraph m2(2, 1);
  m2.add_arc(1, 2, 1);
  m2.add_arc(0, 2, 2);
  m2.add_arc(2, 1, 1);
  DiMultigraph m3(2, 1);
  m3.add_arc(0, 2, 3);
  m3.add_arc(1, 2, 2);
  m3.add_arc(2, 0, 1);

  Graph e1 = encode_simple(m1);
  Graph e2 = encode_simple(m2);
  Graph e3 = encode_simple(m3);
  CHECK(e1.vertex_count() == e2.vertex_count());
  auto w = graph_iso(e1, e2);
  REQUIRE(w.has_value());
  CHECK(is_graph_iso_witness(*w, e1, e2));
  CHECK_FALSE(graph_iso(e1, e3));

  DiMultigraph wide(2, 0);
  wide.add_arc(0, 1, 4);
  CHECK_THROWS_AS(encode_simple(wide), std::invalid_argument);
}

TEST_SUITE_END();

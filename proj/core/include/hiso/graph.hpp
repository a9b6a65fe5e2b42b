#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hiso {

/// Thrown for malformed text inputs; the message carries the line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A bijection between two vertex sets of equal size, stored as the forward
 * permutation image: forward[i] is the image of vertex i (0-based).
 */
struct VertexBijection {
  std::vector<int> forward;

  static VertexBijection identity(int n);
  int size() const { return static_cast<int>(forward.size()); }
  int operator()(int i) const { return forward[i]; }
  bool is_bijection() const;
  VertexBijection inverse() const;
};

/// (a . b)(i) = a(b(i)).
VertexBijection compose(const VertexBijection& a, const VertexBijection& b);
bool operator==(const VertexBijection& a, const VertexBijection& b);

/**
 * Finite simple undirected graph on vertices 0..n-1.  Edges are unordered
 * pairs with i < j; loops and duplicates are rejected.
 */
class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;

  /// Sorted list of (i, j) pairs with i < j.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  /**
   * Text format: first line is the vertex count, each following line is an
   * edge "i j" with 1 <= i < j <= n.  Lines are newline terminated.
   */
  static Graph parse(const std::string& text);
  std::string to_text() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

bool operator==(const Graph& a, const Graph& b);

/// True when b maps edges of g1 onto edges of g2 and non-edges onto non-edges.
bool is_graph_iso_witness(const VertexBijection& b, const Graph& g1, const Graph& g2);

/**
 * Directed multigraph over two vertex sorts, "element" and "triple".
 * Vertices 0..n_elem-1 are the element sort, the rest are the triple sort.
 * Parallel arcs between the same ordered pair are kept merged as a single
 * entry with summed multiplicity; every stored multiplicity is >= 1.
 */
class DiMultigraph {
 public:
  enum class Sort { element, triple };

  DiMultigraph(int n_elem, int n_triple);

  int vertex_count() const { return n_elem_ + n_triple_; }
  int element_count() const { return n_elem_; }
  int triple_count() const { return n_triple_; }
  Sort sort_of(int v) const;

  void add_arc(int src, int dst, int mult);
  int multiplicity(int src, int dst) const;
  int arc_entry_count() const;

  /// Out-arcs of v as sorted (dst, mult) pairs.
  const std::vector<std::pair<int, int>>& out(int v) const { return out_[v]; }
  /// In-arcs of v as sorted (src, mult) pairs.
  const std::vector<std::pair<int, int>>& in(int v) const { return in_[v]; }

  /// Sum of arc multiplicities incident to v (in plus out).
  int weighted_degree(int v) const;

  /**
   * Text format: first line "n_elem n_triple", each following line is an arc
   * "src dst mult" where vertices are named e<k> (element sort) or t<k>
   * (triple sort), both 1-based within their sort.
   */
  static DiMultigraph parse(const std::string& text);
  std::string to_text() const;

 private:
  int n_elem_;
  int n_triple_;
  std::vector<std::vector<std::pair<int, int>>> out_;
  std::vector<std::vector<std::pair<int, int>>> in_;
};

bool operator==(const DiMultigraph& a, const DiMultigraph& b);

/// True when b maps every arc of m1 onto an arc of m2 with the exact same
/// multiplicity, preserves sorts, and misses nothing in either direction.
bool is_multigraph_iso_witness(const VertexBijection& b, const DiMultigraph& m1,
                               const DiMultigraph& m2);

}  // namespace hiso

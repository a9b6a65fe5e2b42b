#include "hiso/graph.hpp"

#include <algorithm>
#include <sstream>

namespace hiso {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

/// Splits text into lines; a missing final newline is tolerated.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

long parse_integer(const std::string& t, int line) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer, got '" + t + "'");
  }
  if (pos != t.size()) parse_fail(line, "expected an integer, got '" + t + "'");
  return v;
}

}  // namespace

VertexBijection VertexBijection::identity(int n) {
  VertexBijection b;
  b.forward.resize(n);
  for (int i = 0; i < n; ++i) b.forward[i] = i;
  return b;
}

bool VertexBijection::is_bijection() const {
  std::vector<bool> seen(forward.size(), false);
  for (int v : forward) {
    if (v < 0 || v >= size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

VertexBijection VertexBijection::inverse() const {
  VertexBijection b;
  b.forward.resize(forward.size());
  for (int i = 0; i < size(); ++i) b.forward[forward[i]] = i;
  return b;
}

VertexBijection compose(const VertexBijection& a, const VertexBijection& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bijection size mismatch");
  VertexBijection c;
  c.forward.resize(a.size());
  for (int i = 0; i < a.size(); ++i) c.forward[i] = a(b(i));
  return c;
}

bool operator==(const VertexBijection& a, const VertexBijection& b) {
  return a.forward == b.forward;
}

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

void Graph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (i == j) throw std::invalid_argument("loop edges are not allowed");
  if (i > j) std::swap(i, j);
  if (has_edge(i, j)) throw std::invalid_argument("duplicate edge");
  edges_.emplace_back(i, j);
  std::sort(edges_.begin(), edges_.end());
  adj_[i].push_back(j);
  adj_[j].push_back(i);
  std::sort(adj_[i].begin(), adj_[i].end());
  std::sort(adj_[j].begin(), adj_[j].end());
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

Graph Graph::parse(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty() || blank(lines[0])) {
    parse_fail(1, "expected vertex count");
  }
  auto head = tokens(lines[0]);
  if (head.size() != 1) parse_fail(1, "expected a single vertex count");
  long n = parse_integer(head[0], 1);
  if (n < 0) parse_fail(1, "vertex count must be non-negative");
  Graph g(static_cast<int>(n));
  for (size_t k = 1; k < lines.size(); ++k) {
    int line = static_cast<int>(k + 1);
    if (blank(lines[k])) continue;
    auto ts = tokens(lines[k]);
    if (ts.size() != 2) parse_fail(line, "expected an edge 'i j'");
    long i = parse_integer(ts[0], line);
    long j = parse_integer(ts[1], line);
    if (i < 1 || j < 1 || i > n || j > n) {
      parse_fail(line, "edge endpoint out of range 1.." + std::to_string(n));
    }
    if (i == j) parse_fail(line, "loop edge '" + lines[k] + "'");
    if (i > j) parse_fail(line, "edge must be written with i < j");
    if (g.has_edge(static_cast<int>(i - 1), static_cast<int>(j - 1))) {
      parse_fail(line, "duplicate edge '" + lines[k] + "'");
    }
    g.add_edge(static_cast<int>(i - 1), static_cast<int>(j - 1));
  }
  return g;
}

std::string Graph::to_text() const {
  std::ostringstream out;
  out << n_ << "\n";
  for (const auto& [i, j] : edges_) out << i + 1 << " " << j + 1 << "\n";
  return out.str();
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

bool is_graph_iso_witness(const VertexBijection& b, const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  if (b.size() != g1.vertex_count() || !b.is_bijection()) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  for (const auto& [i, j] : g1.edges()) {
    if (!g2.has_edge(b(i), b(j))) return false;
  }
  return true;
}

DiMultigraph::DiMultigraph(int n_elem, int n_triple)
    : n_elem_(n_elem),
      n_triple_(n_triple),
      out_(n_elem + n_triple),
      in_(n_elem + n_triple) {
  if (n_elem < 0 || n_triple < 0) {
    throw std::invalid_argument("vertex counts must be non-negative");
  }
}

DiMultigraph::Sort DiMultigraph::sort_of(int v) const {
  return v < n_elem_ ? Sort::element : Sort::triple;
}

namespace {

void bump(std::vector<std::pair<int, int>>& list, int key, int mult) {
  auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(key, 0));
  if (it != list.end() && it->first == key) {
    it->second += mult;
  } else {
    list.insert(it, {key, mult});
  }
}

}  // namespace

void DiMultigraph::add_arc(int src, int dst, int mult) {
  if (src < 0 || dst < 0 || src >= vertex_count() || dst >= vertex_count()) {
    throw std::invalid_argument("arc endpoint out of range");
  }
  if (mult < 1) throw std::invalid_argument("arc multiplicity must be >= 1");
  bump(out_[src], dst, mult);
  bump(in_[dst], src, mult);
}

int DiMultigraph::multiplicity(int src, int dst) const {
  const auto& list = out_[src];
  auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(dst, 0));
  if (it != list.end() && it->first == dst) return it->second;
  return 0;
}

int DiMultigraph::arc_entry_count() const {
  int c = 0;
  for (const auto& list : out_) c += static_cast<int>(list.size());
  return c;
}

int DiMultigraph::weighted_degree(int v) const {
  int d = 0;
  for (const auto& [u, m] : out_[v]) {
    (void)u;
    d += m;
  }
  for (const auto& [u, m] : in_[v]) {
    (void)u;
    d += m;
  }
  return d;
}

namespace {

int parse_multigraph_vertex(const std::string& t, int n_elem, int n_triple, int line) {
  if (t.size() < 2 || (t[0] != 'e' && t[0] != 't')) {
    parse_fail(line, "vertex must be named e<k> or t<k>, got '" + t + "'");
  }
  long k = parse_integer(t.substr(1), line);
  if (t[0] == 'e') {
    if (k < 1 || k > n_elem) {
      parse_fail(line, "element vertex out of range: '" + t + "'");
    }
    return static_cast<int>(k - 1);
  }
  if (k < 1 || k > n_triple) {
    parse_fail(line, "triple vertex out of range: '" + t + "'");
  }
  return n_elem + static_cast<int>(k - 1);
}

}  // namespace

DiMultigraph DiMultigraph::parse(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty() || blank(lines[0])) {
    parse_fail(1, "expected 'n_elem n_triple'");
  }
  auto head = tokens(lines[0]);
  if (head.size() != 2) parse_fail(1, "expected 'n_elem n_triple'");
  long ne = parse_integer(head[0], 1);
  long nt = parse_integer(head[1], 1);
  if (ne < 0 || nt < 0) parse_fail(1, "vertex counts must be non-negative");
  DiMultigraph m(static_cast<int>(ne), static_cast<int>(nt));
  for (size_t k = 1; k < lines.size(); ++k) {
    int line = static_cast<int>(k + 1);
    if (blank(lines[k])) continue;
    auto ts = tokens(lines[k]);
    if (ts.size() != 3) parse_fail(line, "expected an arc 'src dst mult'");
    int src = parse_multigraph_vertex(ts[0], m.element_count(), m.triple_count(), line);
    int dst = parse_multigraph_vertex(ts[1], m.element_count(), m.triple_count(), line);
    long mult = parse_integer(ts[2], line);
    if (mult < 1) parse_fail(line, "arc multiplicity must be >= 1");
    m.add_arc(src, dst, static_cast<int>(mult));
  }
  return m;
}

std::string DiMultigraph::to_text() const {
  auto name = [this](int v) {
    if (v < n_elem_) return "e" + std::to_string(v + 1);
    return "t" + std::to_string(v - n_elem_ + 1);
  };
  std::ostringstream outs;
  outs << n_elem_ << " " << n_triple_ << "\n";
  for (int v = 0; v < vertex_count(); ++v) {
    for (const auto& [dst, mult] : out_[v]) {
      outs << name(v) << " " << name(dst) << " " << mult << "\n";
    }
  }
  return outs.str();
}

bool operator==(const DiMultigraph& a, const DiMultigraph& b) {
  if (a.element_count() != b.element_count() || a.triple_count() != b.triple_count()) {
    return false;
  }
  for (int v = 0; v < a.vertex_count(); ++v) {
    if (a.out(v) != b.out(v)) return false;
  }
  return true;
}

bool is_multigraph_iso_witness(const VertexBijection& b, const DiMultigraph& m1,
                               const DiMultigraph& m2) {
  if (m1.element_count() != m2.element_count() ||
      m1.triple_count() != m2.triple_count()) {
    return false;
  }
  if (b.size() != m1.vertex_count() || !b.is_bijection()) return false;
  for (int v = 0; v < m1.vertex_count(); ++v) {
    if (m1.sort_of(v) != m2.sort_of(b(v))) return false;
  }
  if (m1.arc_entry_count() != m2.arc_entry_count()) return false;
  for (int v = 0; v < m1.vertex_count(); ++v) {
    for (const auto& [dst, mult] : m1.out(v)) {
      if (m2.multiplicity(b(v), b(dst)) != mult) return false;
    }
  }
  return true;
}

}  // namespace hiso

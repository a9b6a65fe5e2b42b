#include "hiso/graph_iso.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace hiso {

namespace {

/**
 * Internal search representation: vertices carry an initial color, arcs
 * carry a small integer label (the multiplicity).  Undirected graphs store
 * each edge in both directions with label 1.
 */
struct ColoredDigraph {
  int n = 0;
  std::vector<int> init_color;
  std::vector<std::vector<std::pair<int, int>>> out;  // (neighbor, label)
  std::vector<std::vector<std::pair<int, int>>> in;
};

ColoredDigraph from_graph(const Graph& g) {
  ColoredDigraph d;
  d.n = g.vertex_count();
  d.init_color.assign(d.n, 0);
  d.out.resize(d.n);
  for (const auto& [i, j] : g.edges()) {
    d.out[i].push_back({j, 1});
    d.out[j].push_back({i, 1});
  }
  for (auto& list : d.out) std::sort(list.begin(), list.end());
  d.in = d.out;  // symmetric
  return d;
}

ColoredDigraph from_multigraph(const DiMultigraph& m) {
  ColoredDigraph d;
  d.n = m.vertex_count();
  d.init_color.resize(d.n);
  for (int v = 0; v < d.n; ++v) {
    d.init_color[v] = m.sort_of(v) == DiMultigraph::Sort::element ? 0 : 1;
  }
  d.out.resize(d.n);
  d.in.resize(d.n);
  for (int v = 0; v < d.n; ++v) {
    d.out[v].assign(m.out(v).begin(), m.out(v).end());
    d.in[v].assign(m.in(v).begin(), m.in(v).end());
  }
  return d;
}

using Signature = std::vector<int64_t>;

/**
 * Joint color refinement over two graphs.  One round recomputes every
 * vertex signature (own color, sorted out-neighborhood colors with labels,
 * sorted in-neighborhood colors with labels) and renumbers colors by the
 * sorted order of the distinct signatures across BOTH graphs, so cells of
 * equal color correspond between the graphs.  Iterates to a fixed point.
 */
struct Refiner {
  const ColoredDigraph& g1;
  const ColoredDigraph& g2;

  Signature signature(const ColoredDigraph& g, const std::vector<int>& colors,
                      int v) const {
    Signature s;
    s.reserve(2 + g.out[v].size() + g.in[v].size());
    s.push_back(colors[v]);
    std::vector<int64_t> nbr;
    nbr.reserve(g.out[v].size());
    for (const auto& [u, label] : g.out[v]) {
      nbr.push_back((static_cast<int64_t>(label) << 32) | colors[u]);
    }
    std::sort(nbr.begin(), nbr.end());
    s.push_back(-1);  // separator
    s.insert(s.end(), nbr.begin(), nbr.end());
    nbr.clear();
    for (const auto& [u, label] : g.in[v]) {
      nbr.push_back((static_cast<int64_t>(label) << 32) | colors[u]);
    }
    std::sort(nbr.begin(), nbr.end());
    s.push_back(-2);
    s.insert(s.end(), nbr.begin(), nbr.end());
    return s;
  }

  /**
   * Refines the pair of colorings in place.  Returns false as soon as the
   * two graphs disagree on the multiset of colors, which proves they cannot
   * be isomorphic under the current individualization.
   */
  bool refine(std::vector<int>& c1, std::vector<int>& c2) const {
    int color_count = 0;
    {
      std::map<int, int> histo;
      for (int c : c1) histo[c]++;
      std::map<int, int> histo2;
      for (int c : c2) histo2[c]++;
      if (histo != histo2) return false;
      color_count = static_cast<int>(histo.size());
    }
    while (true) {
      std::vector<Signature> sigs1(g1.n), sigs2(g2.n);
      for (int v = 0; v < g1.n; ++v) sigs1[v] = signature(g1, c1, v);
      for (int v = 0; v < g2.n; ++v) sigs2[v] = signature(g2, c2, v);

      std::vector<Signature> all = sigs1;
      all.insert(all.end(), sigs2.begin(), sigs2.end());
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());

      auto rank = [&all](const Signature& s) {
        return static_cast<int>(
            std::lower_bound(all.begin(), all.end(), s) - all.begin());
      };
      std::vector<int> n1(g1.n), n2(g2.n);
      std::vector<int> h1(all.size(), 0), h2(all.size(), 0);
      for (int v = 0; v < g1.n; ++v) {
        n1[v] = rank(sigs1[v]);
        h1[n1[v]]++;
      }
      for (int v = 0; v < g2.n; ++v) {
        n2[v] = rank(sigs2[v]);
        h2[n2[v]]++;
      }
      if (h1 != h2) return false;
      int new_count = static_cast<int>(all.size());
      c1 = std::move(n1);
      c2 = std::move(n2);
      if (new_count == color_count) return true;  // stable
      color_count = new_count;
    }
  }
};

bool arcs_match(const ColoredDigraph& g1, const ColoredDigraph& g2,
                const std::vector<int>& map) {
  for (int v = 0; v < g1.n; ++v) {
    if (g1.out[v].size() != g2.out[map[v]].size()) return false;
    std::vector<std::pair<int, int>> image;
    image.reserve(g1.out[v].size());
    for (const auto& [u, label] : g1.out[v]) image.push_back({map[u], label});
    std::sort(image.begin(), image.end());
    if (image != g2.out[map[v]]) return false;
  }
  return true;
}

struct IsoSearch {
  const ColoredDigraph& g1;
  const ColoredDigraph& g2;
  Refiner refiner{g1, g2};

  std::optional<std::vector<int>> search(std::vector<int> c1, std::vector<int> c2,
                                         int next_color) {
    if (!refiner.refine(c1, c2)) return std::nullopt;

    // Locate the smallest non-singleton cell; ties go to the lowest color.
    std::map<int, int> cell_size;
    for (int c : c1) cell_size[c]++;
    int target = -1, best = g1.n + 1;
    for (const auto& [c, size] : cell_size) {
      if (size > 1 && size < best) {
        best = size;
        target = c;
      }
    }

    if (target == -1) {
      // Discrete partition: the color classes define the only candidate map.
      std::vector<int> map(g1.n, -1);
      std::map<int, int> color_to_v2;
      for (int v = 0; v < g2.n; ++v) color_to_v2[c2[v]] = v;
      for (int v = 0; v < g1.n; ++v) {
        auto it = color_to_v2.find(c1[v]);
        if (it == color_to_v2.end()) return std::nullopt;
        map[v] = it->second;
      }
      if (!arcs_match(g1, g2, map)) return std::nullopt;
      return map;
    }

    int v = 0;
    while (c1[v] != target) ++v;  // lowest vertex index in the cell
    for (int w = 0; w < g2.n; ++w) {
      if (c2[w] != target) continue;
      auto n1 = c1;
      auto n2 = c2;
      n1[v] = next_color;
      n2[w] = next_color;
      auto r = search(std::move(n1), std::move(n2), next_color + 1);
      if (r) return r;
    }
    return std::nullopt;
  }
};

std::optional<VertexBijection> find_iso(const ColoredDigraph& g1,
                                        const ColoredDigraph& g2) {
  if (g1.n != g2.n) return std::nullopt;
  if (g1.n == 0) return VertexBijection{};
  IsoSearch s{g1, g2};
  int max_init = 0;
  for (int c : g1.init_color) max_init = std::max(max_init, c);
  for (int c : g2.init_color) max_init = std::max(max_init, c);
  auto r = s.search(g1.init_color, g2.init_color, max_init + 1 + 2 * g1.n);
  if (!r) return std::nullopt;
  return VertexBijection{std::move(*r)};
}

}  // namespace

std::optional<VertexBijection> graph_iso(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  return find_iso(from_graph(g1), from_graph(g2));
}

std::optional<VertexBijection> multigraph_iso(const DiMultigraph& m1,
                                              const DiMultigraph& m2) {
  if (m1.element_count() != m2.element_count() ||
      m1.triple_count() != m2.triple_count() ||
      m1.arc_entry_count() != m2.arc_entry_count()) {
    return std::nullopt;
  }
  return find_iso(from_multigraph(m1), from_multigraph(m2));
}

Graph encode_simple(const DiMultigraph& m) {
  int units = 0;
  for (int v = 0; v < m.vertex_count(); ++v) {
    for (const auto& [dst, mult] : m.out(v)) {
      (void)dst;
      if (mult > 3) {
        throw std::invalid_argument(
            "encode_simple requires multiplicities <= 3, got " +
            std::to_string(mult));
      }
      units += mult;
    }
  }
  int base = m.vertex_count();
  // 3 marker vertices per original, then 3 vertices (x, y, leaf) per arc unit.
  Graph g(base + 3 * base + 3 * units);
  int next = base;
  for (int v = 0; v < base; ++v) {
    int q1 = next++, q2 = next++, q3 = next++;
    g.add_edge(v, q1);
    g.add_edge(q1, q2);
    g.add_edge(q2, q3);
  }
  for (int v = 0; v < base; ++v) {
    for (const auto& [dst, mult] : m.out(v)) {
      for (int k = 0; k < mult; ++k) {
        int x = next++, y = next++, leaf = next++;
        g.add_edge(v, x);
        g.add_edge(x, y);
        g.add_edge(y, dst);
        g.add_edge(x, leaf);
      }
    }
  }
  return g;
}

}  // namespace hiso

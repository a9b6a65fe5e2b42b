#include "hiso/gamma.hpp"

#include <stdexcept>

#include "hiso/graph_iso.hpp"

namespace hiso {

int gamma_triple_id(const CayleyGroup& g, int u, int v, int w) {
  int m = g.order();
  if (m < 3) {
    throw std::invalid_argument("the multigraph construction needs order >= 3");
  }
  for (int x : {u, v, w}) {
    if (x < 0 || x >= m) throw std::out_of_range("triple entry out of range");
  }
  return m + (u * m + v) * m + w;
}

DiMultigraph build_gamma(const CayleyGroup& g) {
  int m = g.order();
  if (m < 3) {
    throw std::invalid_argument("the multigraph construction needs order >= 3");
  }
  DiMultigraph gamma(m, m * m * m);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      int prod = g.op(u, v);
      for (int w = 0; w < m; ++w) {
        int t = gamma_triple_id(g, u, v, w);
        gamma.add_arc(u, t, 1);
        gamma.add_arc(v, t, w == prod ? 2 : 1);
        if (w == prod) gamma.add_arc(t, w, 1);
      }
    }
  }
  return gamma;
}

std::vector<int> extend_homomorphism(const std::vector<int>& h,
                                     const CayleyGroup& g,
                                     const CayleyGroup& target) {
  if (!is_homomorphism(h, g, target)) {
    throw std::invalid_argument("the element map is not a homomorphism");
  }
  if (g.order() < 3 || target.order() < 3) {
    throw std::invalid_argument("both groups must have order >= 3");
  }
  int m = g.order();
  std::vector<int> f(m + m * m * m);
  for (int u = 0; u < m; ++u) f[u] = h[u];
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      for (int w = 0; w < m; ++w) {
        f[gamma_triple_id(g, u, v, w)] = gamma_triple_id(target, h[u], h[v], h[w]);
      }
    }
  }
  return f;
}

bool arcs_preserved(const std::vector<int>& f, const DiMultigraph& m1,
                    const DiMultigraph& m2) {
  if (static_cast<int>(f.size()) != m1.vertex_count()) return false;
  for (int v : f) {
    if (v < 0 || v >= m2.vertex_count()) return false;
  }
  for (int src = 0; src < m1.vertex_count(); ++src) {
    for (const auto& [dst, mult] : m1.out(src)) {
      (void)mult;
      if (m2.multiplicity(f[src], f[dst]) < 1) return false;
    }
  }
  return true;
}

bool gamma_iso_check(const CayleyGroup& g1, const CayleyGroup& g2) {
  if (g1.order() > 8 || g2.order() > 8) {
    throw std::invalid_argument("gamma_iso_check is capped at order 8");
  }
  return multigraph_iso(build_gamma(g1), build_gamma(g2)).has_value();
}

}  // namespace hiso

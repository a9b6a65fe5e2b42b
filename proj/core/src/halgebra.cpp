#include "hiso/halgebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hiso {

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.vpart == b.vpart && a.apart == b.apart;
}
bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return {a.vpart + b.vpart, a.apart + b.apart};
}
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return {a.vpart - b.vpart, a.apart - b.apart};
}

namespace {

std::vector<std::pair<int, int>> lex_pairs(int n) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
  }
  return ps;
}

ProfilePtr pair_profile(Prime p, const std::vector<bool>& pair_edge) {
  std::vector<uint32_t> moduli(pair_edge.size());
  for (size_t q = 0; q < pair_edge.size(); ++q) {
    moduli[q] = pair_edge[q] ? p.pow(1) : p.pow(2);
  }
  return std::make_shared<const ModulusProfile>(p, std::move(moduli));
}

std::vector<bool> edge_tags(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> tags;
  tags.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) tags.push_back(g.has_edge(i, j));
  }
  return tags;
}

}  // namespace

HAlgebra::HAlgebra(Prime p, int n, AlgebraKind kind, std::vector<bool> pair_edge,
                   std::vector<MixedVector> vv)
    : p_(p),
      n_(n),
      kind_(kind),
      pairs_(lex_pairs(n)),
      pair_edge_(std::move(pair_edge)),
      vprofile_(ModulusProfile::uniform(p, n, 3)),
      aprofile_(pair_profile(p, pair_edge_)),
      vv_(std::move(vv)) {
  if (n < 0) throw std::invalid_argument("generator count must be non-negative");
  if (pair_edge_.size() != pairs_.size()) {
    throw std::invalid_argument("pair tag list has wrong length");
  }
  if (vv_.size() != pairs_.size()) {
    throw std::invalid_argument("structure constant table has wrong length");
  }
  for (auto& entry : vv_) {
    // Re-anchor onto the shared profile so later shape checks are cheap.
    if (!entry.profile() || !entry.profile()->same_shape(*aprofile_)) {
      throw std::invalid_argument("structure constant entry has wrong profile");
    }
    std::vector<uint32_t> values(entry.size());
    for (size_t r = 0; r < entry.size(); ++r) values[r] = entry.value(r);
    entry = MixedVector(aprofile_, std::move(values));
  }
}

HAlgebra HAlgebra::graph_algebra(const Graph& g, Prime p) {
  auto tags = edge_tags(g);
  auto profile = pair_profile(p, tags);
  std::vector<MixedVector> vv;
  vv.reserve(tags.size());
  for (size_t q = 0; q < tags.size(); ++q) {
    MixedVector unit(profile);
    unit.set(q, 1);
    vv.push_back(std::move(unit));
  }
  return HAlgebra(p, g.vertex_count(), AlgebraKind::commutative, std::move(tags),
                  std::move(vv));
}

HAlgebra HAlgebra::h_algebra(const Graph& g, Prime p) {
  auto tags = edge_tags(g);
  auto profile = pair_profile(p, tags);
  std::vector<MixedVector> vv;
  vv.reserve(tags.size());
  for (size_t q = 0; q < tags.size(); ++q) {
    MixedVector unit(profile);
    unit.set(q, 1);
    vv.push_back(std::move(unit));
  }
  return HAlgebra(p, g.vertex_count(), AlgebraKind::lie, std::move(tags),
                  std::move(vv));
}

HAlgebra HAlgebra::from_table(Prime p, int n, AlgebraKind kind,
                              std::vector<bool> pair_edge,
                              std::vector<MixedVector> vv) {
  return HAlgebra(p, n, kind, std::move(pair_edge), std::move(vv));
}

int HAlgebra::pair_index(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::invalid_argument("pair index needs two distinct vertices in range");
  }
  if (i > j) std::swap(i, j);
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

Graph HAlgebra::tag_graph() const {
  Graph g(n_);
  for (int q = 0; q < pair_count(); ++q) {
    if (pair_edge_[q]) g.add_edge(pairs_[q].first, pairs_[q].second);
  }
  return g;
}

MixedVector HAlgebra::basis_product(int i, int j) const {
  if (i == j) return MixedVector(aprofile_);
  int q = pair_index(i, j);
  if (i < j) return vv_[q];
  if (kind_ == AlgebraKind::commutative) return vv_[q];
  return -vv_[q];
}

AlgebraElement HAlgebra::zero() const {
  return {MixedVector(vprofile_), MixedVector(aprofile_)};
}

AlgebraElement HAlgebra::vertex_gen(int i) const {
  AlgebraElement e = zero();
  e.vpart.set(i, 1);
  return e;
}

AlgebraElement HAlgebra::pair_gen(int q) const {
  AlgebraElement e = zero();
  e.apart.set(q, 1);
  return e;
}

AlgebraElement HAlgebra::random_element(RandomSource& rng) const {
  AlgebraElement e = zero();
  for (int i = 0; i < n_; ++i) e.vpart.set(i, rng.below(p_.pow(3)));
  for (int q = 0; q < pair_count(); ++q) {
    e.apart.set(q, rng.below(aprofile_->modulus(q)));
  }
  return e;
}

AlgebraElement HAlgebra::multiply(const AlgebraElement& x,
                                  const AlgebraElement& y) const {
  if (!x.vpart.profile()->same_shape(*vprofile_) ||
      !y.vpart.profile()->same_shape(*vprofile_) ||
      !x.apart.profile()->same_shape(*aprofile_) ||
      !y.apart.profile()->same_shape(*aprofile_)) {
    throw std::invalid_argument("element does not belong to this algebra");
  }
  uint32_t cube = p_.pow(3);
  AlgebraElement r = zero();
  for (int q = 0; q < pair_count(); ++q) {
    auto [i, j] = pairs_[q];
    uint64_t xi = x.vpart.value(i), xj = x.vpart.value(j);
    uint64_t yi = y.vpart.value(i), yj = y.vpart.value(j);
    uint64_t c;
    if (kind_ == AlgebraKind::lie) {
      c = (xi * yj % cube + cube - xj * yi % cube) % cube;
    } else {
      c = (xi * yj + xj * yi) % cube;
    }
    if (c != 0) r.apart += scaled(vv_[q], c);
  }
  return r;
}

bool HAlgebra::same_shape(const HAlgebra& other) const {
  return p_ == other.p_ && n_ == other.n_ && kind_ == other.kind_;
}

AlgebraElement apply_iso(const AlgebraIso& f, const HAlgebra& from,
                         const HAlgebra& to, const AlgebraElement& x) {
  if (!from.same_shape(to)) throw std::invalid_argument("algebra shape mismatch");
  const auto& b = f.vertex_map;
  AlgebraElement r = to.zero();
  for (int i = 0; i < from.generator_count(); ++i) {
    r.vpart.set(b(i), x.vpart.value(i));
  }
  for (int q = 0; q < from.pair_count(); ++q) {
    auto [i, j] = from.pair_at(q);
    int bi = b(i), bj = b(j);
    int q2 = to.pair_index(bi, bj);
    if (from.central_profile()->modulus(q) != to.central_profile()->modulus(q2)) {
      throw std::invalid_argument("pair tags not preserved by this map");
    }
    uint32_t m = to.central_profile()->modulus(q2);
    uint32_t v = x.apart.value(q);
    if (bi > bj && to.kind() == AlgebraKind::lie) v = (m - v) % m;
    r.apart.set(q2, v);
  }
  return r;
}

std::optional<AlgebraIso> induced_iso(const VertexBijection& b, const HAlgebra& a1,
                                      const HAlgebra& a2) {
  if (!a1.same_shape(a2)) {
    throw std::invalid_argument("induced_iso needs algebras of equal size, prime and kind");
  }
  if (b.size() != a1.generator_count() || !b.is_bijection()) {
    throw std::invalid_argument("vertex map is not a bijection of the right size");
  }
  for (int q = 0; q < a1.pair_count(); ++q) {
    auto [i, j] = a1.pair_at(q);
    if (a1.pair_is_edge(q) != a2.pair_is_edge(a2.pair_index(b(i), b(j)))) {
      return std::nullopt;
    }
  }
  return AlgebraIso{b};
}

bool check_iso_witness(const AlgebraIso& f, const HAlgebra& a1, const HAlgebra& a2) {
  if (!a1.same_shape(a2)) return false;
  const auto& b = f.vertex_map;
  if (b.size() != a1.generator_count() || !b.is_bijection()) return false;
  for (int q = 0; q < a1.pair_count(); ++q) {
    auto [i, j] = a1.pair_at(q);
    if (a1.pair_is_edge(q) != a2.pair_is_edge(a2.pair_index(b(i), b(j)))) {
      return false;
    }
  }
  for (int i = 0; i < a1.generator_count(); ++i) {
    for (int j = i + 1; j < a1.generator_count(); ++j) {
      AlgebraElement lhs =
          apply_iso(f, a1, a2, a1.multiply(a1.vertex_gen(i), a1.vertex_gen(j)));
      AlgebraElement rhs =
          a2.multiply(a2.vertex_gen(b(i)), a2.vertex_gen(b(j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

/// Applies a central map given by columns (images of the a-generators).
MixedVector apply_central(const std::vector<MixedVector>& central,
                          const MixedVector& v) {
  MixedVector r(central.empty() ? v.profile() : central[0].profile());
  for (size_t k = 0; k < central.size(); ++k) {
    if (v.value(k) != 0) r += scaled(central[k], v.value(k));
  }
  return r;
}

/// Checks that column k may receive the image of a generator of order m_k
/// and that the induced endomorphism of a-span / p * a-span is invertible.
void validate_central_aut(const HAlgebra& a, const std::vector<MixedVector>& central) {
  int l = a.pair_count();
  if (static_cast<int>(central.size()) != l) {
    throw std::invalid_argument("central map needs one column per pair");
  }
  uint32_t p = a.prime().value();
  const auto& prof = *a.central_profile();
  for (int k = 0; k < l; ++k) {
    if (!central[k].profile()->same_shape(prof)) {
      throw std::invalid_argument("central column has wrong profile");
    }
    for (int r = 0; r < l; ++r) {
      // Image of an order-m_k generator must have order dividing m_k.
      if (static_cast<uint64_t>(central[k].value(r)) * prof.modulus(k) %
              prof.modulus(r) !=
          0) {
        throw std::invalid_argument("central map does not respect generator orders");
      }
    }
  }
  if (l == 0) return;
  ModMatrix reduced(l, l, p);
  for (int k = 0; k < l; ++k) {
    for (int r = 0; r < l; ++r) reduced.set(r, k, central[k].value(r) % p);
  }
  if (!invertible_mod_p(reduced, p)) {
    throw std::invalid_argument("central map is not invertible");
  }
}

}  // namespace

HAlgebra change_basis(const HAlgebra& a, const ModMatrix& vbasis,
                      const std::vector<MixedVector>& central) {
  int n = a.generator_count();
  uint32_t cube = a.prime().pow(3);
  if (vbasis.rows != n || vbasis.cols != n || vbasis.modulus != cube) {
    throw std::invalid_argument("v-basis matrix must be n x n mod p^3");
  }
  if (!invertible_mod_p(vbasis, a.prime().value())) {
    throw std::invalid_argument("v-basis matrix is not invertible");
  }
  validate_central_aut(a, central);

  std::vector<AlgebraElement> w;
  w.reserve(n);
  for (int i = 0; i < n; ++i) {
    AlgebraElement e = a.zero();
    for (int j = 0; j < n; ++j) e.vpart.set(j, vbasis.at(i, j));
    w.push_back(std::move(e));
  }
  std::vector<MixedVector> vv;
  vv.reserve(a.pair_count());
  for (int q = 0; q < a.pair_count(); ++q) {
    auto [i, j] = a.pair_at(q);
    vv.push_back(apply_central(central, a.multiply(w[i], w[j]).apart));
  }
  std::vector<bool> tags;
  tags.reserve(a.pair_count());
  for (int q = 0; q < a.pair_count(); ++q) tags.push_back(a.pair_is_edge(q));
  return HAlgebra::from_table(a.prime(), n, a.kind(), std::move(tags), std::move(vv));
}

HAlgebra scramble_basis(const HAlgebra& a, uint64_t seed) {
  if (a.kind() != AlgebraKind::lie) {
    throw std::invalid_argument("scramble_basis expects a lie-kind algebra");
  }
  RandomSource rng(seed);
  int n = a.generator_count();
  uint32_t p = a.prime().value();
  uint32_t cube = a.prime().pow(3);

  ModMatrix m(n, n, cube);
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.set(i, j, rng.below(cube));
    }
  } while (n > 0 && !invertible_mod_p(m, p));

  // Random automorphism of the a-span: unconstrained images mod the target
  // moduli, except that order-p generators may only pick up multiples of p
  // on order-p^2 coordinates; redraw until the mod-p reduction is invertible.
  int l = a.pair_count();
  const auto& prof = *a.central_profile();
  std::vector<MixedVector> central(l, MixedVector(a.central_profile()));
  if (l > 0) {
    while (true) {
      for (int k = 0; k < l; ++k) {
        for (int r = 0; r < l; ++r) {
          uint32_t mr = prof.modulus(r);
          if (prof.modulus(k) == p && mr == p * p) {
            central[k].set(r, p * rng.below(p));
          } else {
            central[k].set(r, rng.below(mr));
          }
        }
      }
      ModMatrix reduced(l, l, p);
      for (int k = 0; k < l; ++k) {
        for (int r = 0; r < l; ++r) reduced.set(r, k, central[k].value(r) % p);
      }
      if (invertible_mod_p(reduced, p)) break;
    }
  }
  return change_basis(a, m, central);
}

std::optional<Graph> recover_graph(const HAlgebra& a, int max_n) {
  if (a.kind() != AlgebraKind::lie) {
    throw std::invalid_argument("recover_graph expects a lie-kind algebra");
  }
  int n = a.generator_count();
  if (n > max_n) {
    throw std::invalid_argument("recover_graph is capped at " +
                                std::to_string(max_n) + " generators");
  }
  uint32_t p = a.prime().value();
  uint32_t psq = a.prime().pow(2);
  int l = a.pair_count();

  std::vector<uint32_t> want_orders;
  want_orders.reserve(l);
  for (int q = 0; q < l; ++q) want_orders.push_back(a.central_profile()->modulus(q));
  std::sort(want_orders.begin(), want_orders.end());

  std::optional<Graph> found;
  for_each_invertible(n, p, [&](const ModMatrix& b) {
    std::vector<AlgebraElement> w;
    w.reserve(n);
    for (int i = 0; i < n; ++i) {
      AlgebraElement e = a.zero();
      for (int j = 0; j < n; ++j) e.vpart.set(j, b.at(i, j));
      w.push_back(std::move(e));
    }
    std::vector<MixedVector> z;
    std::vector<uint32_t> orders;
    z.reserve(l);
    orders.reserve(l);
    for (int q = 0; q < l; ++q) {
      auto [i, j] = a.pair_at(q);
      z.push_back(a.multiply(w[i], w[j]).apart);
      uint64_t o = z.back().additive_order();
      if (o != p && o != psq) return false;
      orders.push_back(static_cast<uint32_t>(o));
    }
    auto sorted = orders;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != want_orders) return false;
    if (l > 0) {
      ModMatrix reduced(l, l, p);
      for (int q = 0; q < l; ++q) {
        for (int r = 0; r < l; ++r) reduced.set(r, q, z[q].value(r) % p);
      }
      if (!invertible_mod_p(reduced, p)) return false;
    }
    Graph g(n);
    for (int q = 0; q < l; ++q) {
      if (orders[q] == p) {
        auto [i, j] = a.pair_at(q);
        g.add_edge(i, j);
      }
    }
    found = std::move(g);
    return true;
  });
  return found;
}

std::string algebra_to_text(const HAlgebra& a) {
  std::ostringstream out;
  out << a.prime().value() << " " << a.generator_count() << " "
      << (a.kind() == AlgebraKind::lie ? "lie" : "commutative") << "\n";
  auto pair_name = [&a](int q) {
    auto [i, j] = a.pair_at(q);
    std::string sep = a.generator_count() > 9 ? "_" : "";
    return "a_" + std::to_string(i + 1) + sep + std::to_string(j + 1);
  };
  for (int q = 0; q < a.pair_count(); ++q) {
    auto [i, j] = a.pair_at(q);
    out << i + 1 << " " << j + 1 << " " << (a.pair_is_edge(q) ? "edge" : "nonedge")
        << "\n";
  }
  for (int q = 0; q < a.pair_count(); ++q) {
    const auto& entry = a.table_entry(q);
    if (entry.is_zero()) continue;
    auto [i, j] = a.pair_at(q);
    out << "v_" << i + 1 << " * v_" << j + 1 << " =";
    bool first = true;
    for (int r = 0; r < a.pair_count(); ++r) {
      if (entry.value(r) == 0) continue;
      out << (first ? " " : " + ") << entry.value(r) << " * " << pair_name(r);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hiso

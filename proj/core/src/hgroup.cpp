#include "hiso/hgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hiso {

bool operator==(const HGroupElement& a, const HGroupElement& b) {
  return a.alpha == b.alpha && a.central == b.central;
}

bool operator!=(const HGroupElement& a, const HGroupElement& b) {
  return !(a == b);
}

void HGroup::init() {
  if (base_.kind() != AlgebraKind::lie) {
    throw std::invalid_argument("group construction requires a lie-kind algebra");
  }
  if (chi_.size() != base_.generator_count() || !chi_.is_bijection()) {
    throw std::invalid_argument("chi must be a bijection on the basis indices");
  }
  sigma_ = chi_.inverse();
  int n = base_.generator_count();
  alpha_profile_ = ModulusProfile::uniform(base_.prime(), n, 3);
  comm_.reserve(base_.pair_count());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      comm_.push_back(base_.basis_product(sigma_(j), sigma_(i)));
    }
  }
}

HGroup::HGroup(HAlgebra base, VertexBijection chi)
    : base_(std::move(base)), chi_(std::move(chi)) {
  init();
}

HGroup::HGroup(HAlgebra base)
    : base_(std::move(base)),
      chi_(VertexBijection::identity(base_.generator_count())) {
  init();
}

HGroupElement HGroup::identity_element() const {
  return HGroupElement{MixedVector(alpha_profile_),
                       MixedVector(base_.central_profile())};
}

HGroupElement HGroup::generator(int i) const {
  if (i < 0 || i >= generator_count()) {
    throw std::out_of_range("generator index out of range");
  }
  HGroupElement g = identity_element();
  g.alpha.set(i, 1);
  return g;
}

HGroupElement HGroup::central_generator(int q) const {
  if (q < 0 || q >= pair_count()) {
    throw std::out_of_range("central slot out of range");
  }
  HGroupElement g = identity_element();
  g.central.set(q, 1);
  return g;
}

HGroupElement HGroup::random_element(RandomSource& rng) const {
  HGroupElement g = identity_element();
  for (size_t i = 0; i < g.alpha.size(); ++i) {
    g.alpha.set(i, rng.below(alpha_profile_->modulus(i)));
  }
  for (size_t q = 0; q < g.central.size(); ++q) {
    g.central.set(q, rng.below(base_.central_profile()->modulus(q)));
  }
  return g;
}

MixedVector HGroup::correction(const MixedVector& a, const MixedVector& b) const {
  MixedVector acc(base_.central_profile());
  int n = generator_count();
  int q = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++q) {
      uint64_t coef = static_cast<uint64_t>(a.value(j)) * b.value(i);
      if (coef != 0) acc += scaled(comm_[q], coef);
    }
  }
  return acc;
}

HGroupElement HGroup::mul(const HGroupElement& x, const HGroupElement& y) const {
  if (x.alpha.size() != static_cast<size_t>(generator_count()) ||
      y.alpha.size() != static_cast<size_t>(generator_count())) {
    throw std::invalid_argument("element does not belong to this group");
  }
  HGroupElement r;
  r.alpha = x.alpha + y.alpha;
  r.central = x.central + y.central + correction(x.alpha, y.alpha);
  return r;
}

HGroupElement HGroup::inv(const HGroupElement& x) const {
  HGroupElement r;
  r.alpha = -x.alpha;
  r.central = correction(x.alpha, x.alpha) - x.central;
  return r;
}

HGroupElement HGroup::power(const HGroupElement& x, uint64_t k) const {
  uint64_t p3 = prime().pow(3);
  // x^k = (k*alpha, k*central + C(k,2)*correction(alpha, alpha)); the
  // binomial is reduced mod p^3 through the inverse of 2 (p is odd).
  uint64_t inv2 = (p3 + 1) / 2;
  uint64_t kr = k % p3;
  uint64_t km1 = (kr + p3 - 1) % p3;
  uint64_t binom = kr * km1 % p3 * inv2 % p3;
  HGroupElement r;
  r.alpha = scaled(x.alpha, k);
  r.central = scaled(x.central, k) + scaled(correction(x.alpha, x.alpha), binom);
  return r;
}

HGroupElement HGroup::commutator(const HGroupElement& x, const HGroupElement& y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

uint64_t HGroup::element_order(const HGroupElement& x) const {
  const HGroupElement e = identity_element();
  HGroupElement acc = x;
  uint64_t k = 1;
  while (acc != e) {
    acc = mul(acc, x);
    ++k;
  }
  return k;
}

uint64_t HGroup::order() const {
  unsigned __int128 acc = 1;
  uint64_t p3 = prime().pow(3);
  for (int i = 0; i < generator_count(); ++i) {
    acc *= p3;
    if (acc > UINT64_MAX) throw std::overflow_error("group order exceeds 64 bits");
  }
  for (int q = 0; q < pair_count(); ++q) {
    acc *= base_.central_profile()->modulus(q);
    if (acc > UINT64_MAX) throw std::overflow_error("group order exceeds 64 bits");
  }
  return static_cast<uint64_t>(acc);
}

bool HGroup::same_shape(const HGroup& other) const {
  return base_.same_shape(other.base_) &&
         base_.central_profile()->same_shape(*other.base_.central_profile());
}

HGroupElement evaluate_word(const HGroup& g, const GroupWord& w) {
  int n = g.generator_count();
  HGroupElement acc = g.identity_element();
  for (const auto& [idx, e] : w.letters) {
    if (idx < 0 || idx >= n + g.pair_count()) {
      throw std::out_of_range("word letter out of range");
    }
    HGroupElement base = idx < n ? g.generator(idx) : g.central_generator(idx - n);
    uint64_t mag = e < 0 ? static_cast<uint64_t>(-(e + 1)) + 1
                         : static_cast<uint64_t>(e);
    if (e < 0) base = g.inv(base);
    acc = g.mul(acc, g.power(base, mag));
  }
  return acc;
}

namespace {

std::string principal_name(int i) { return "g" + std::to_string(i + 1); }

std::string central_name(int n, int k, int l) {
  std::string sep = n > 9 ? "_" : "";
  return "a" + std::to_string(k + 1) + sep + std::to_string(l + 1);
}

GroupWord commutator_word(int x, int y) {
  return GroupWord{{{x, -1}, {y, -1}, {x, 1}, {y, 1}}};
}

std::string commutator_text(const std::string& x, const std::string& y) {
  return "[" + x + "," + y + "]";
}

}  // namespace

Presentation export_presentation(const HGroup& g) {
  const HAlgebra& a = g.algebra();
  int n = g.generator_count();
  int l = g.pair_count();
  Presentation pres;
  pres.principal_count = n;
  for (int i = 0; i < n; ++i) pres.names.push_back(principal_name(i));
  for (int q = 0; q < l; ++q) {
    auto [k, m] = a.pair_at(q);
    pres.names.push_back(central_name(n, k, m));
  }
  auto push = [&pres](GroupWord w, std::string text) {
    pres.relators.push_back(std::move(w));
    pres.relator_text.push_back(std::move(text));
  };
  // Bracket relators: [gi,gj] equals the central word of the commutator.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      HGroupElement c = g.commutator(g.generator(i), g.generator(j));
      GroupWord w = commutator_word(i, j);
      std::string text = commutator_text(pres.names[i], pres.names[j]);
      for (int q = 0; q < l; ++q) {
        int64_t coef = c.central.value(q);
        if (coef == 0) continue;
        w.letters.emplace_back(n + q, -coef);
        text += "*" + pres.names[n + q] + "^-" + std::to_string(coef);
      }
      push(std::move(w), std::move(text));
    }
  }
  // Centrality of the a-span.
  for (int q = 0; q < l; ++q) {
    for (int r = q + 1; r < l; ++r) {
      push(commutator_word(n + q, n + r),
           commutator_text(pres.names[n + q], pres.names[n + r]));
    }
  }
  for (int q = 0; q < l; ++q) {
    for (int i = 0; i < n; ++i) {
      push(commutator_word(n + q, i),
           commutator_text(pres.names[n + q], pres.names[i]));
    }
  }
  // Power relators.
  uint64_t p3 = g.prime().pow(3);
  for (int i = 0; i < n; ++i) {
    push(GroupWord{{{i, static_cast<int64_t>(p3)}}},
         pres.names[i] + "^" + std::to_string(p3));
  }
  for (int q = 0; q < l; ++q) {
    uint64_t m = a.central_profile()->modulus(q);
    push(GroupWord{{{n + q, static_cast<int64_t>(m)}}},
         pres.names[n + q] + "^" + std::to_string(m));
  }
  return pres;
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "F := FreeGroup(";
  for (size_t i = 0; i < names.size(); ++i) {
    out << (i == 0 ? " " : ", ") << '"' << names[i] << '"';
  }
  out << " );\n";
  out << "rels := [\n";
  for (size_t r = 0; r < relator_text.size(); ++r) {
    out << "  " << relator_text[r] << (r + 1 == relator_text.size() ? "" : ",") << "\n";
  }
  out << "];\n";
  return out.str();
}

GroupIsoWitness transport_iso(const AlgebraIso& f, const HGroup& g1,
                              const HGroup& g2) {
  if (!check_iso_witness(f, g1.algebra(), g2.algebra())) {
    throw std::invalid_argument(
        "transport requires a valid isomorphism of the base algebras");
  }
  VertexBijection pi =
      compose(g2.chi(), compose(f.vertex_map, g1.chi().inverse()));
  GroupIsoWitness w{f, pi};
  // Smoke-check multiplicativity on all generator pairs; random elements
  // are exercised by the property tests.
  std::vector<HGroupElement> gens;
  for (int i = 0; i < g1.generator_count(); ++i) gens.push_back(g1.generator(i));
  for (int q = 0; q < g1.pair_count(); ++q) gens.push_back(g1.central_generator(q));
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      HGroupElement lhs = apply_transport(w, g1, g2, g1.mul(x, y));
      HGroupElement rhs =
          g2.mul(apply_transport(w, g1, g2, x), apply_transport(w, g1, g2, y));
      if (lhs != rhs) {
        throw std::logic_error("transported map failed the generator check");
      }
    }
  }
  return w;
}

HGroupElement apply_transport(const GroupIsoWitness& w, const HGroup& g1,
                              const HGroup& g2, const HGroupElement& x) {
  HGroupElement acc = g2.identity_element();
  for (int i = 0; i < g1.generator_count(); ++i) {
    uint64_t e = x.alpha.value(i);
    if (e != 0) {
      acc = g2.mul(acc, g2.power(g2.generator(w.pi_tilde(i)), e));
    }
  }
  AlgebraElement z = g1.algebra().zero();
  z.apart = x.central;
  HGroupElement tail = g2.identity_element();
  tail.central = apply_iso(w.algebra_iso, g1.algebra(), g2.algebra(), z).apart;
  return g2.mul(acc, tail);
}

HAlgebra reconstruct_algebra(const HGroup& g) {
  const HAlgebra& base = g.algebra();
  int n = base.generator_count();
  std::vector<bool> edge;
  std::vector<MixedVector> vv;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      HGroupElement c =
          g.commutator(g.generator(g.chi()(k)), g.generator(g.chi()(l)));
      vv.push_back(c.central);
      edge.push_back(base.pair_is_edge(base.pair_index(k, l)));
    }
  }
  return HAlgebra::from_table(base.prime(), n, AlgebraKind::lie,
                              std::move(edge), std::move(vv));
}

}  // namespace hiso

#include "hiso/selftest.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hiso/cayley.hpp"
#include "hiso/gamma.hpp"
#include "hiso/graph_iso.hpp"
#include "hiso/halgebra.hpp"
#include "hiso/hgroup.hpp"
#include "hiso/matrixwild.hpp"
#include "hiso/modarith.hpp"
#include "hiso/modmatrix.hpp"
#include "hiso/rng.hpp"

namespace hiso {

std::vector<Graph> all_graphs(int n) {
  if (n < 1) throw std::invalid_argument("graph corpus needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  if (pairs.size() > 20) throw std::invalid_argument("graph corpus too large");
  std::vector<Graph> out;
  out.reserve(size_t{1} << pairs.size());
  for (uint32_t mask = 0; mask < (uint32_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1) g.add_edge(pairs[e].first, pairs[e].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::vector<Graph> graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& g : all_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

Graph permute_graph(const Graph& g, const VertexBijection& b) {
  Graph out(g.vertex_count());
  for (auto [i, j] : g.edges()) {
    int u = b(i), v = b(j);
    out.add_edge(std::min(u, v), std::max(u, v));
  }
  return out;
}

VertexBijection rotation(int n, int k) {
  VertexBijection b = VertexBijection::identity(n);
  for (int i = 0; i < n; ++i) b.forward[i] = (i + k) % n;
  return b;
}

/// x^k by literal repeated multiplication (k small).
HGroupElement pow_chain(const HGroup& g, const HGroupElement& x, uint64_t k) {
  HGroupElement acc = g.identity_element();
  for (uint64_t s = 0; s < k; ++s) acc = g.mul(acc, x);
  return acc;
}

AlgebraElement scale_elem(const AlgebraElement& x, uint64_t c) {
  return AlgebraElement{scaled(x.vpart, c), scaled(x.apart, c)};
}

ModMatrix random_matrix(RandomSource& rng, int n, uint32_t p) {
  ModMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, rng.below(p));
  }
  return m;
}

ModMatrix random_invertible(RandomSource& rng, int n, uint32_t p) {
  while (true) {
    ModMatrix m = random_matrix(rng, n, p);
    if (invertible_mod_p(m, p)) return m;
  }
}

MatrixPair conjugated(const MatrixPair& x, const ModMatrix& s, uint32_t p) {
  ModMatrix si = inverse_mod_p(s, p);
  return MatrixPair{mat_mul(mat_mul(s, x.a), si), mat_mul(mat_mul(s, x.b), si)};
}

struct HomCase {
  std::string name;
  CayleyGroup source;
  CayleyGroup target;
  std::vector<int> map;
};

std::vector<HomCase> hom_corpus() {
  CayleyGroup z3 = CayleyGroup::cyclic(3);
  CayleyGroup z4 = CayleyGroup::cyclic(4);
  CayleyGroup z6 = CayleyGroup::cyclic(6);
  CayleyGroup z8 = CayleyGroup::cyclic(8);
  CayleyGroup z2 = CayleyGroup::cyclic(2);
  CayleyGroup v4 = CayleyGroup::direct_product(z2, z2);
  CayleyGroup z2xz4 = CayleyGroup::direct_product(z2, z4);
  CayleyGroup s3 = CayleyGroup::symmetric3();
  CayleyGroup d4 = CayleyGroup::dihedral(4);
  CayleyGroup q8 = CayleyGroup::quaternion8();

  std::vector<HomCase> cases;
  cases.push_back({"Z3->Z3 identity", z3, z3, {0, 1, 2}});
  {
    std::vector<int> h(6);
    for (int x = 0; x < 6; ++x) h[x] = x % 3;
    cases.push_back({"Z6->Z3 reduction", z6, z3, h});
  }
  {
    std::vector<int> h(4);
    for (int x = 0; x < 4; ++x) h[x] = 2 * x % 4;
    cases.push_back({"Z4->Z4 doubling", z4, z4, h});
  }
  {
    std::vector<int> h(3);
    for (int x = 0; x < 3; ++x) h[x] = 2 * x;
    cases.push_back({"Z3->Z6 embedding", z3, z6, h});
  }
  cases.push_back({"S3->Z3 trivial", s3, z3, std::vector<int>(6, 0)});
  {
    // r^a s^b encoded as a + 4b; image (a mod 2, b) in Z2 x Z2 (x*2 + y).
    std::vector<int> h(8);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 2; ++b) h[a + 4 * b] = (a % 2) * 2 + b;
    }
    cases.push_back({"D4->Z2xZ2 quotient", d4, v4, h});
  }
  {
    // Units 1,i,j,k at even ids, negatives at odd; kill the sign.
    std::vector<int> unit_image{0, 2, 1, 3};
    std::vector<int> h(8);
    for (int e = 0; e < 8; ++e) h[e] = unit_image[e / 2];
    cases.push_back({"Q8->Z2xZ2 quotient", q8, v4, h});
  }
  {
    std::vector<int> h(8);
    for (int x = 0; x < 8; ++x) h[x] = x % 4;
    cases.push_back({"Z8->Z4 reduction", z8, z4, h});
  }
  {
    std::vector<int> h(8);
    for (int e = 0; e < 8; ++e) h[e] = e % 4;  // (x, y) -> y under x*4 + y
    cases.push_back({"Z2xZ4->Z4 projection", z2xz4, z4, h});
  }
  {
    int c = 1;  // conjugation by a fixed non-identity permutation
    std::vector<int> h(6);
    for (int x = 0; x < 6; ++x) h[x] = s3.op(s3.op(c, x), s3.inverse(c));
    cases.push_back({"S3->S3 inner automorphism", s3, s3, h});
  }
  return cases;
}

}  // namespace

// ---------------------------------------------------------------------------
// Theorem-level checks.
// ---------------------------------------------------------------------------

CheckResult check_algebra_roundtrip(uint32_t p, int max_n, uint64_t seed) {
  CheckResult r{"algebra-roundtrip", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  int cap = std::min(max_n, 3);
  Prime prime(p);
  std::vector<Graph> corpus = graphs_up_to(cap);
  std::vector<Graph> recovered;
  recovered.reserve(corpus.size());
  for (size_t k = 0; k < corpus.size(); ++k) {
    HAlgebra alg = HAlgebra::h_algebra(corpus[k], prime);
    HAlgebra scrambled = scramble_basis(alg, seed + k + 1);
    std::optional<Graph> got = recover_graph(scrambled);
    if (!got) return failed("recovery failed on graph #" + std::to_string(k));
    recovered.push_back(std::move(*got));
  }
  int pairs = 0;
  for (size_t i = 0; i < corpus.size(); ++i) {
    for (size_t j = 0; j < corpus.size(); ++j) {
      bool direct = graph_iso(corpus[i], corpus[j]).has_value();
      bool via = graph_iso(recovered[i], recovered[j]).has_value();
      if (direct != via) {
        return failed("verdicts disagree on pair (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
      }
      ++pairs;
    }
  }
  r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(pairs) +
             " pairs agree (p=" + std::to_string(p) + ")";
  return r;
}

CheckResult check_transport_multiplicativity(int max_n, int samples,
                                             uint64_t seed) {
  CheckResult r{"transport-multiplicativity", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  int cap = std::min(max_n, 4);
  int iso_pairs = 0;
  long long checked = 0;
  for (uint32_t p : {3u, 5u}) {
    Prime prime(p);
    std::vector<Graph> corpus = graphs_up_to(cap);
    for (size_t i = 0; i < corpus.size(); ++i) {
      for (size_t j = 0; j < corpus.size(); ++j) {
        if (corpus[i].vertex_count() != corpus[j].vertex_count()) continue;
        std::optional<VertexBijection> w = graph_iso(corpus[i], corpus[j]);
        if (!w) continue;
        int n = corpus[i].vertex_count();
        HAlgebra a1 = HAlgebra::h_algebra(corpus[i], prime);
        HAlgebra a2 = HAlgebra::h_algebra(corpus[j], prime);
        std::optional<AlgebraIso> f = induced_iso(*w, a1, a2);
        if (!f) return failed("graph witness rejected by the algebra lift");
        HGroup g1(a1);
        HGroup g2(a2, rotation(n, 1));  // non-identity ordering on the right
        GroupIsoWitness t;
        GroupIsoWitness back;
        try {
          t = transport_iso(*f, g1, g2);
          back = transport_iso(f->inverse(), g2, g1);
        } catch (const std::exception& e) {
          return failed(std::string("transport construction failed: ") + e.what());
        }
        for (int i2 = 0; i2 < n; ++i2) {
          if (apply_transport(t, g1, g2, g1.generator(i2)) !=
              g2.generator(t.pi_tilde(i2))) {
            return failed("generator image mismatch");
          }
        }
        RandomSource rng(seed ^ (p * 1000003ull + i * 1009 + j));
        for (int s = 0; s < samples; ++s) {
          HGroupElement x = g1.random_element(rng);
          HGroupElement y = g1.random_element(rng);
          HGroupElement lhs = apply_transport(t, g1, g2, g1.mul(x, y));
          HGroupElement rhs = g2.mul(apply_transport(t, g1, g2, x),
                                     apply_transport(t, g1, g2, y));
          if (lhs != rhs) {
            return failed("F(xy) != F(x)F(y) on sample " + std::to_string(s) +
                          " (p=" + std::to_string(p) + ")");
          }
          if (s < 50 &&
              apply_transport(back, g2, g1, apply_transport(t, g1, g2, x)) != x) {
            return failed("inverse transport does not invert");
          }
          ++checked;
        }
        ++iso_pairs;
      }
    }
  }
  r.detail = std::to_string(iso_pairs) + " isomorphic pairs, " +
             std::to_string(checked) + " sample products (p in {3,5})";
  return r;
}

CheckResult check_renewal_reconstruction(int max_n) {
  CheckResult r{"renewal-reconstruction", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  int groups = 0;
  for (uint32_t p : {3u, 5u}) {
    Prime prime(p);
    for (const Graph& g : graphs_up_to(std::min(max_n, 4))) {
      int n = g.vertex_count();
      HAlgebra alg = HAlgebra::h_algebra(g, prime);
      for (int k : {0, 1}) {
        HGroup grp(alg, rotation(n, k));
        HAlgebra rec = reconstruct_algebra(grp);
        AlgebraIso f2{VertexBijection::identity(n)};
        if (!check_iso_witness(f2, alg, rec)) {
          return failed("identity witness rejected (n=" + std::to_string(n) +
                        ", p=" + std::to_string(p) + ", chi shift " +
                        std::to_string(k) + ")");
        }
        for (int q = 0; q < alg.pair_count(); ++q) {
          if (rec.table_entry(q) != alg.table_entry(q)) {
            return failed("reconstructed table deviates at pair " +
                          std::to_string(q));
          }
        }
        ++groups;
      }
    }
  }
  r.detail = std::to_string(groups) + " groups reconstructed exactly (p in {3,5})";
  return r;
}

CheckResult check_gamma_group_agreement() {
  CheckResult r{"gamma-vs-table-oracle", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  auto corpus = standard_group_corpus();
  int pairs = 0;
  for (const auto& [name1, t1] : corpus) {
    for (const auto& [name2, t2] : corpus) {
      bool via_table = group_iso_small(t1, t2).has_value();
      bool via_gamma = gamma_iso_check(t1, t2);
      if (via_table != via_gamma) {
        return failed("oracles disagree on " + name1 + " vs " + name2);
      }
      ++pairs;
    }
  }
  for (const auto& [name, t] : corpus) {
    std::vector<int> perm(t.order());
    for (int i = 0; i < t.order(); ++i) perm[i] = (i + 1) % t.order();
    CayleyGroup moved = t.relabeled(perm);
    if (!gamma_iso_check(t, moved) || !group_iso_small(t, moved)) {
      return failed("relabeled copy of " + name + " not recognized");
    }
    ++pairs;
  }
  r.detail = std::to_string(pairs) + " group pairs, verdicts agree";
  return r;
}

CheckResult check_hom_extension() {
  CheckResult r{"hom-extension-arcs", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  auto cases = hom_corpus();
  for (const auto& c : cases) {
    if (!is_homomorphism(c.map, c.source, c.target)) {
      return failed(c.name + " is not a homomorphism");
    }
    std::vector<int> f;
    try {
      f = extend_homomorphism(c.map, c.source, c.target);
    } catch (const std::exception& e) {
      return failed(c.name + ": " + e.what());
    }
    DiMultigraph m1 = build_gamma(c.source);
    DiMultigraph m2 = build_gamma(c.target);
    if (!arcs_preserved(f, m1, m2)) {
      return failed(c.name + ": an arc image is missing");
    }
  }
  r.detail = std::to_string(cases.size()) + " homomorphisms, all arcs preserved";
  return r;
}

CheckResult check_exponent_nilpotency(int max_n, int samples, uint64_t seed) {
  CheckResult r{"exponent-and-nilpotency", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  std::vector<HGroup> groups;
  for (uint32_t p : {3u, 5u}) {
    Prime prime(p);
    for (const Graph& g : graphs_up_to(std::min(max_n, 4))) {
      groups.emplace_back(HAlgebra::h_algebra(g, prime));
    }
  }
  int per_group = std::max(1, (samples + static_cast<int>(groups.size()) - 1) /
                              static_cast<int>(groups.size()));
  long long sampled = 0;
  for (size_t k = 0; k < groups.size(); ++k) {
    const HGroup& g = groups[k];
    uint64_t p3 = g.prime().pow(3);
    for (int i = 0; i < g.generator_count(); ++i) {
      if (g.element_order(g.generator(i)) != p3) {
        return failed("generator order is not p^3 (group #" + std::to_string(k) + ")");
      }
    }
    for (int q = 0; q < g.pair_count(); ++q) {
      uint64_t want = g.algebra().central_profile()->modulus(q);
      if (g.element_order(g.central_generator(q)) != want) {
        return failed("central generator order mismatch (group #" +
                      std::to_string(k) + ")");
      }
    }
    RandomSource rng(seed ^ (k * 2654435761ull + 17));
    for (int s = 0; s < per_group; ++s) {
      HGroupElement x = g.random_element(rng);
      HGroupElement y = g.random_element(rng);
      HGroupElement z = g.random_element(rng);
      if (pow_chain(g, x, p3) != g.identity_element()) {
        return failed("x^(p^3) != e (group #" + std::to_string(k) + ")");
      }
      if (g.commutator(g.commutator(x, y), z) != g.identity_element()) {
        return failed("[[x,y],z] != e (group #" + std::to_string(k) + ")");
      }
      ++sampled;
    }
  }
  r.detail = std::to_string(groups.size()) + " groups, " +
             std::to_string(sampled) + " samples (p in {3,5})";
  return r;
}

CheckResult check_size_bounds(int max_n, std::vector<SizeReport>* reports) {
  CheckResult r{"size-bounds", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  auto note = [reports](SizeReport rep) {
    if (reports) reports->push_back(std::move(rep));
  };
  for (const auto& [name, t] : standard_group_corpus()) {
    uint64_t m = t.order();
    DiMultigraph gamma = build_gamma(t);
    uint64_t got = gamma.vertex_count();
    bool ok = got == m + m * m * m;
    note({"group " + name, m, "multigraph vertices", got, "m + m^3", ok});
    if (!ok) return failed("vertex count of " + name + " violates m + m^3");
  }
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    uint64_t want = n + uint64_t(n) * (n - 1) / 2;
    for (const Graph& g : all_graphs(n)) {
      HAlgebra alg = HAlgebra::h_algebra(g, Prime(3));
      uint64_t got = alg.vertex_profile()->size() + alg.pair_count();
      if (got != want) {
        return failed("basis size violates n + n(n-1)/2 at n=" + std::to_string(n));
      }
    }
    note({"graphs on n=" + std::to_string(n) + " vertices", uint64_t(n),
          "algebra basis", want, "n + n(n-1)/2", true});
  }
  r.detail = "all corpus sizes exact: m + m^3 and n + n(n-1)/2";
  return r;
}

CheckResult check_presentation_soundness(int max_n) {
  CheckResult r{"presentation-soundness", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  long long relators = 0;
  for (uint32_t p : {3u, 5u}) {
    Prime prime(p);
    for (const Graph& g : graphs_up_to(std::min(max_n, 4))) {
      int n = g.vertex_count();
      for (int k : {0, 1}) {
        HGroup grp(HAlgebra::h_algebra(g, prime), rotation(n, k));
        Presentation pres = export_presentation(grp);
        uint64_t l = grp.pair_count();
        uint64_t want =
            l + l * (l - 1) / 2 + l * n + n + l;  // brackets, centrality, powers
        if (pres.relators.size() != want) {
          return failed("relator count " + std::to_string(pres.relators.size()) +
                        " != " + std::to_string(want));
        }
        for (size_t w = 0; w < pres.relators.size(); ++w) {
          if (evaluate_word(grp, pres.relators[w]) != grp.identity_element()) {
            return failed("relator '" + pres.relator_text[w] +
                          "' not the identity (n=" + std::to_string(n) +
                          ", p=" + std::to_string(p) + ")");
          }
          ++relators;
        }
      }
    }
  }
  r.detail = std::to_string(relators) + " relators all evaluate to the identity";
  return r;
}

CheckResult check_similarity_and_center(int pairs, int max_n, uint64_t seed) {
  CheckResult r{"similarity-equivalence-and-center", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  const int n = 2;
  const uint32_t p = 3;
  Prime prime(p);
  RandomSource rng(seed + 4242);
  auto valid_witness = [&](const ModMatrix& s, const MatrixPair& x,
                           const MatrixPair& y) {
    return invertible_mod_p(s, p) && mat_mul(s, x.a) == mat_mul(y.a, s) &&
           mat_mul(s, x.b) == mat_mul(y.b, s);
  };
  for (int k = 0; k < pairs; ++k) {
    MatrixPair x{random_matrix(rng, n, p), random_matrix(rng, n, p)};
    auto refl = simsim(x, x, prime);
    if (!refl || !valid_witness(*refl, x, x)) {
      return failed("reflexivity failed at pair " + std::to_string(k));
    }
    ModMatrix s = random_invertible(rng, n, p);
    MatrixPair y = conjugated(x, s, p);
    auto fw = simsim(x, y, prime);
    if (!fw || !valid_witness(*fw, x, y)) {
      return failed("conjugated pair not recognized at " + std::to_string(k));
    }
    auto bw = simsim(y, x, prime);
    if (!bw || !valid_witness(*bw, y, x)) {
      return failed("symmetry failed at pair " + std::to_string(k));
    }
    ModMatrix t = random_invertible(rng, n, p);
    MatrixPair z = conjugated(y, t, p);
    auto tr = simsim(x, z, prime);
    if (!tr || !valid_witness(*tr, x, z)) {
      return failed("transitivity failed at pair " + std::to_string(k));
    }
  }
  {
    ModMatrix id = ModMatrix::identity(n, p);
    ModMatrix zero(n, n, p);
    if (simsim(MatrixPair{id, zero}, MatrixPair{id, id}, prime)) {
      return failed("(I,0) reported similar to (I,I)");
    }
    ModMatrix diag(n, n, p);
    diag.set(0, 0, 1);
    diag.set(1, 1, 2);
    if (simsim(MatrixPair{diag, zero}, MatrixPair{zero, zero}, prime)) {
      return failed("pairs with different characteristic polynomials matched");
    }
  }
  int bounds = 0;
  for (int nn = 3; nn <= std::min(max_n, 4); ++nn) {
    for (const Graph& g : all_graphs(nn)) {
      HGroup grp(HAlgebra::h_algebra(g, prime));
      uint64_t l = uint64_t(nn) * (nn - 1) / 2;
      uint64_t e = g.edge_count();
      uint64_t want = 1;
      for (uint64_t i = 0; i < e; ++i) want *= p;
      for (uint64_t i = 0; i < 2 * (l - e); ++i) want *= p;
      uint64_t bound = center_order_bound(grp);
      if (bound != want || bound < prime.pow(3)) {
        return failed("center bound mismatch on a graph with n=" +
                      std::to_string(nn));
      }
      ++bounds;
    }
  }
  {
    HGroup small(HAlgebra::h_algebra(all_graphs(2)[1], prime));
    bool threw = false;
    try {
      center_order_bound(small);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    if (!threw) return failed("center bound accepted a 2-vertex graph");
  }
  r.detail = std::to_string(pairs) + " random pairs equivalent as expected, " +
             std::to_string(bounds) + " center bounds exact";
  return r;
}

// ---------------------------------------------------------------------------
// Module-invariant checks.
// ---------------------------------------------------------------------------

CheckResult check_modarith_axioms() {
  CheckResult r{"modarith-axioms", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  for (uint32_t bad : {1u, 2u, 4u, 9u, 1024u, 1025u}) {
    bool threw = false;
    try {
      Prime q(bad);
      (void)q;
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    if (!threw) return failed("Prime accepted " + std::to_string(bad));
  }
  for (uint32_t good : {3u, 5u, 7u, 997u, 1021u}) {
    if (Prime(good).value() != good) return failed("Prime rejected a valid value");
  }
  Prime p(3);
  for (int k = 1; k <= 3; ++k) {
    uint32_t m = p.pow(k);
    for (uint32_t a = 0; a < m; ++a) {
      Residue ra(a, m);
      uint32_t naive = 1;
      while (scaled(MixedVector(ModulusProfile::uniform(p, 1, k), {a}), naive)
                 .value(0) != 0) {
        ++naive;
      }
      if (res_order(ra) != naive) return failed("res_order deviates from naive");
      for (uint32_t b = 0; b < m; ++b) {
        Residue rb(b, m);
        if ((ra + rb).value != (a + b) % m) return failed("res_add wrong");
        if ((ra * rb).value != a * b % m) return failed("res_mul wrong");
        if ((ra + rb).value != (rb + ra).value) return failed("res_add not commutative");
        if ((ra * rb).value != (rb * ra).value) return failed("res_mul not commutative");
        for (uint32_t c = 0; c < m; ++c) {
          Residue rc(c, m);
          if (((ra + rb) + rc).value != (ra + (rb + rc)).value) {
            return failed("res_add not associative");
          }
          if (((ra * rb) * rc).value != (ra * (rb * rc)).value) {
            return failed("res_mul not associative");
          }
        }
      }
    }
  }
  if (Residue(15, 27) + Residue(20, 27) != Residue(8, 27)) {
    return failed("15 + 20 mod 27 != 8");
  }
  if (Residue(5, 27) * Residue(6, 27) != Residue(3, 27)) {
    return failed("5 * 6 mod 27 != 3");
  }
  if (Residue(3, 9) * Residue(3, 9) != Residue(0, 9)) {
    return failed("3 * 3 mod 9 != 0");
  }
  {
    bool threw = false;
    try {
      Residue x = Residue(1, 3) + Residue(1, 9);
      (void)x;
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    if (!threw) return failed("mixed-modulus addition did not throw");
  }
  ProfilePtr profile(new ModulusProfile(p, {3, 9, 27}));
  RandomSource rng(7);
  for (int s = 0; s < 200; ++s) {
    MixedVector v(profile);
    MixedVector w(profile);
    for (size_t i = 0; i < 3; ++i) {
      v.set(i, rng.below(profile->modulus(i)));
      w.set(i, rng.below(profile->modulus(i)));
    }
    if (!(v + (-v)).is_zero()) return failed("v + (-v) != 0");
    if (v + w != w + v) return failed("vec_add not commutative");
    if (!scaled(v, 27).is_zero()) return failed("p^3 * v != 0");
    uint64_t c = rng.below(27);
    MixedVector sv = scaled(v, c);
    for (size_t i = 0; i < 3; ++i) {
      if (sv.value(i) != c % profile->modulus(i) * v.value(i) % profile->modulus(i)) {
        return failed("scaled is not componentwise");
      }
    }
    if (scalar_mul(Residue(c, 27), v) != sv) return failed("scalar_mul deviates");
    uint64_t naive = 1;
    while (!scaled(v, naive).is_zero()) ++naive;
    if (v.additive_order() != naive) return failed("additive_order deviates");
  }
  {
    bool threw = false;
    try {
      MixedVector v(profile);
      scalar_mul(Residue(1, 9), v);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    if (!threw) return failed("scalar_mul accepted a non-p^3 scalar");
  }
  r.detail = "residue/vector axioms exhaustive at p=3, k=1..3";
  return r;
}

CheckResult check_graph_oracles() {
  CheckResult r{"graph-oracles", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  {
    Graph k3(3), p3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    if (graph_iso(k3, p3)) return failed("K3 reported isomorphic to P3");
  }
  {
    Graph c4a(4), c4b(4);
    c4a.add_edge(0, 1);
    c4a.add_edge(1, 2);
    c4a.add_edge(2, 3);
    c4a.add_edge(0, 3);
    c4b.add_edge(0, 2);
    c4b.add_edge(1, 2);
    c4b.add_edge(1, 3);
    c4b.add_edge(0, 3);
    auto w = graph_iso(c4a, c4b);
    if (!w || !is_graph_iso_witness(*w, c4a, c4b)) {
      return failed("C4 relabelings not matched");
    }
  }
  {
    Graph c6(6), twoK3(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(std::min(i, (i + 1) % 6),
                                            std::max(i, (i + 1) % 6));
    twoK3.add_edge(0, 1);
    twoK3.add_edge(1, 2);
    twoK3.add_edge(0, 2);
    twoK3.add_edge(3, 4);
    twoK3.add_edge(4, 5);
    twoK3.add_edge(3, 5);
    if (graph_iso(c6, twoK3)) return failed("C6 reported isomorphic to 2K3");
  }
  {
    Graph star(4), k3iso(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    k3iso.add_edge(0, 1);
    k3iso.add_edge(1, 2);
    k3iso.add_edge(0, 2);
    if (graph_iso(star, k3iso)) return failed("claw reported isomorphic to K3+v");
  }
  int witnessed = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (int k = 0; k < n; ++k) {
        VertexBijection b = rotation(n, k);
        Graph h = permute_graph(g, b);
        auto w = graph_iso(g, h);
        if (!w || !is_graph_iso_witness(*w, g, h)) {
          return failed("permuted copy missed at n=" + std::to_string(n));
        }
        ++witnessed;
      }
    }
  }
  {
    std::vector<Graph> reps;
    for (const Graph& g : all_graphs(4)) {
      bool fresh = true;
      for (const Graph& rep : reps) {
        if (graph_iso(g, rep)) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.push_back(g);
    }
    if (reps.size() != 11) {
      return failed("expected 11 classes on 4 vertices, found " +
                    std::to_string(reps.size()));
    }
  }
  r.detail = std::to_string(witnessed) +
             " permuted copies matched; 11 classes on 4 vertices";
  return r;
}

CheckResult check_encode_simple_oracle() {
  CheckResult r{"multigraph-encoding-oracle", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  DiMultigraph m1(2, 1);
  m1.add_arc(0, 2, 1);
  m1.add_arc(1, 2, 2);
  m1.add_arc(2, 0, 1);
  DiMultigraph m2(2, 1);  // element labels swapped
  m2.add_arc(1, 2, 1);
  m2.add_arc(0, 2, 2);
  m2.add_arc(2, 1, 1);
  DiMultigraph m3(2, 1);  // one multiplicity bumped
  m3.add_arc(0, 2, 3);
  m3.add_arc(1, 2, 2);
  m3.add_arc(2, 0, 1);
  DiMultigraph m4(2, 1);  // product arc points at the other element
  m4.add_arc(0, 2, 1);
  m4.add_arc(1, 2, 2);
  m4.add_arc(2, 1, 1);
  CayleyGroup z3 = CayleyGroup::cyclic(3);
  CayleyGroup z4 = CayleyGroup::cyclic(4);
  CayleyGroup klein =
      CayleyGroup::direct_product(CayleyGroup::cyclic(2), CayleyGroup::cyclic(2));
  DiMultigraph gz = build_gamma(z3);
  DiMultigraph gz2 = build_gamma(z3.relabeled({1, 2, 0}));
  DiMultigraph gz4 = build_gamma(z4);
  DiMultigraph gz4r = build_gamma(z4.relabeled({0, 2, 1, 3}));
  DiMultigraph gk = build_gamma(klein);
  DiMultigraph gkr = build_gamma(klein.relabeled({0, 3, 1, 2}));
  std::vector<std::pair<const DiMultigraph*, const DiMultigraph*>> cases = {
      {&m1, &m1},   {&m1, &m2}, {&m1, &m3},   {&m1, &m4},  {&m3, &m4},
      {&gz, &gz2},  {&gz4, &gz4r}, {&gk, &gkr}, {&gz4, &gk}};
  int agreed = 0;
  for (auto [a, b] : cases) {
    auto direct = multigraph_iso(*a, *b);
    if (direct && !is_multigraph_iso_witness(*direct, *a, *b)) {
      return failed("multigraph witness invalid");
    }
    Graph ea = encode_simple(*a);
    Graph eb = encode_simple(*b);
    auto encoded = graph_iso(ea, eb);
    if (encoded && !is_graph_iso_witness(*encoded, ea, eb)) {
      return failed("encoded witness invalid");
    }
    if (direct.has_value() != encoded.has_value()) {
      return failed("oracle verdicts split on case " + std::to_string(agreed));
    }
    ++agreed;
  }
  {
    DiMultigraph wide(2, 0);
    wide.add_arc(0, 1, 4);
    bool threw = false;
    try {
      encode_simple(wide);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    if (!threw) return failed("multiplicity 4 was not rejected");
  }
  r.detail = std::to_string(agreed) + " verdicts agree across the encoding";
  return r;
}

CheckResult check_algebra_structure(int max_n, uint64_t seed) {
  CheckResult r{"algebra-structure", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  RandomSource rng(seed + 99);
  int algebras = 0;
  for (uint32_t pv : {3u, 5u}) {
    Prime p(pv);
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
      for (const Graph& g : all_graphs(n)) {
        for (AlgebraKind kind : {AlgebraKind::commutative, AlgebraKind::lie}) {
          HAlgebra a = kind == AlgebraKind::lie ? HAlgebra::h_algebra(g, p)
                                                : HAlgebra::graph_algebra(g, p);
          if (a.tag_graph() != g) return failed("tag graph does not round-trip");
          for (int i = 0; i < n; ++i) {
            if (a.vertex_gen(i).vpart.additive_order() != p.pow(3)) {
              return failed("vertex generator order is not p^3");
            }
            if (a.multiply(a.vertex_gen(i), a.vertex_gen(i)) != a.zero()) {
              return failed("v_i * v_i != 0");
            }
          }
          for (int q = 0; q < a.pair_count(); ++q) {
            uint64_t want = a.pair_is_edge(q) ? p.pow(1) : p.pow(2);
            if (a.pair_gen(q).apart.additive_order() != want) {
              return failed("pair generator order does not match its tag");
            }
          }
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
              if (i == j) continue;
              MixedVector lhs = a.basis_product(i, j);
              MixedVector rhs = a.basis_product(j, i);
              bool ok = kind == AlgebraKind::commutative ? lhs == rhs : lhs == -rhs;
              if (!ok) return failed("basis product symmetry violated");
              if (i < j) {
                MixedVector unit(a.central_profile());
                unit.set(a.pair_index(i, j), 1);
                if (lhs != unit) return failed("standard table entry is not a unit");
              }
            }
          }
          AlgebraElement x = a.random_element(rng);
          AlgebraElement y = a.random_element(rng);
          AlgebraElement z = a.random_element(rng);
          if (a.multiply(x + y, z) != a.multiply(x, z) + a.multiply(y, z)) {
            return failed("left additivity fails");
          }
          if (a.multiply(x, y + z) != a.multiply(x, y) + a.multiply(x, z)) {
            return failed("right additivity fails");
          }
          uint64_t c = rng.below(p.pow(3));
          if (a.multiply(scale_elem(x, c), y) != scale_elem(a.multiply(x, y), c)) {
            return failed("scalar does not factor out");
          }
          if (a.multiply(a.multiply(x, y), z) != a.zero() ||
              a.multiply(x, a.multiply(y, z)) != a.zero()) {
            return failed("products of products are not zero");
          }
          for (int q = 0; q < a.pair_count(); ++q) {
            if (a.multiply(a.pair_gen(q), x) != a.zero() ||
                a.multiply(x, a.pair_gen(q)) != a.zero()) {
              return failed("a-span does not annihilate");
            }
          }
          if (kind == AlgebraKind::lie && a.multiply(x, x) != a.zero()) {
            return failed("bracket is not alternating");
          }
          ++algebras;
        }
      }
    }
    // Order structure only, one size up.
    for (const Graph& g : all_graphs(5)) {
      HAlgebra a = HAlgebra::h_algebra(g, p);
      for (int q = 0; q < a.pair_count(); ++q) {
        uint64_t want = a.pair_is_edge(q) ? p.pow(1) : p.pow(2);
        if (a.central_profile()->modulus(q) != want) {
          return failed("pair modulus mismatch at n=5");
        }
      }
      for (int i = 0; i < 5; ++i) {
        if (a.vertex_profile()->modulus(i) != p.pow(3)) {
          return failed("vertex modulus mismatch at n=5");
        }
      }
    }
  }
  r.detail = std::to_string(algebras) + " algebras pass structure checks";
  return r;
}

CheckResult check_induced_iso_exhaustive() {
  CheckResult r{"induced-iso-exhaustive", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  std::vector<VertexBijection> perms;
  std::vector<int> base{0, 1, 2};
  do {
    perms.push_back(VertexBijection{base});
  } while (std::next_permutation(base.begin(), base.end()));
  int accepted = 0, rejected = 0;
  for (uint32_t pv : {3u, 5u}) {
    Prime p(pv);
    std::vector<Graph> corpus = all_graphs(3);
    for (const Graph& g1 : corpus) {
      for (const Graph& g2 : corpus) {
        HAlgebra a1 = HAlgebra::h_algebra(g1, p);
        HAlgebra a2 = HAlgebra::h_algebra(g2, p);
        for (const VertexBijection& b : perms) {
          bool expect = is_graph_iso_witness(b, g1, g2);
          std::optional<AlgebraIso> got = induced_iso(b, a1, a2);
          if (expect != got.has_value()) {
            return failed("induced_iso disagrees with the edge-preservation test");
          }
          if (got) {
            if (!check_iso_witness(*got, a1, a2)) {
              return failed("accepted witness fails multiplicativity");
            }
            ++accepted;
          } else {
            ++rejected;
          }
        }
      }
    }
  }
  r.detail = std::to_string(accepted) + " accepted / " + std::to_string(rejected) +
             " rejected, all verdicts exact";
  return r;
}

CheckResult check_group_axioms(int max_n, int samples, uint64_t seed) {
  CheckResult r{"group-axioms", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  std::vector<HGroup> groups;
  for (uint32_t pv : {3u, 5u}) {
    Prime p(pv);
    for (const Graph& g : graphs_up_to(std::min(max_n, 4))) {
      groups.emplace_back(HAlgebra::h_algebra(g, p));
    }
  }
  int per_group = std::max(1, (samples + static_cast<int>(groups.size()) - 1) /
                              static_cast<int>(groups.size()));
  for (size_t k = 0; k < groups.size(); ++k) {
    const HGroup& g = groups[k];
    uint64_t p3 = g.prime().pow(3);
    RandomSource rng(seed ^ (k * 1099511628211ull + 3));
    for (int s = 0; s < per_group; ++s) {
      HGroupElement x = g.random_element(rng);
      HGroupElement y = g.random_element(rng);
      HGroupElement z = g.random_element(rng);
      if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
        return failed("associativity fails (group #" + std::to_string(k) + ")");
      }
      if (g.mul(x, g.identity_element()) != x ||
          g.mul(g.identity_element(), x) != x) {
        return failed("identity fails");
      }
      if (g.mul(x, g.inv(x)) != g.identity_element() ||
          g.mul(g.inv(x), x) != g.identity_element()) {
        return failed("inverse fails");
      }
      if (g.inv(x) != g.power(x, p3 - 1)) {
        return failed("closed-form inverse != x^(p^3 - 1)");
      }
      for (uint64_t e : {uint64_t{0}, uint64_t{1}, uint64_t{2}, uint64_t{5}, p3}) {
        if (g.power(x, e) != pow_chain(g, x, e)) {
          return failed("closed-form power deviates at k=" + std::to_string(e));
        }
      }
      if (!g.commutator(x, y).alpha.is_zero()) {
        return failed("commutator has a non-central part");
      }
    }
    for (int i = 0; i < g.generator_count(); ++i) {
      for (int j = i + 1; j < g.generator_count(); ++j) {
        HGroupElement c = g.commutator(g.generator(i), g.generator(j));
        if (g.chi() == VertexBijection::identity(g.generator_count()) &&
            c.central != g.algebra().basis_product(i, j)) {
          return failed("[g_i, g_j] differs from the bracket");
        }
      }
    }
  }
  {
    // Fixed two-vertex-edge example: products in the two orders differ by
    // exactly the central pair generator, and (g1 g2)^2 = g1^2 g2^2 (v2 x v1).
    Graph k2(2);
    k2.add_edge(0, 1);
    HGroup g(HAlgebra::h_algebra(k2, Prime(3)));
    HGroupElement ab = g.mul(g.generator(0), g.generator(1));
    HGroupElement ba = g.mul(g.generator(1), g.generator(0));
    if (ba != g.mul(ab, g.inv(g.central_generator(0)))) {
      return failed("g2 g1 != (g1 g2) a12^-1");
    }
    HGroupElement sq = g.mul(ab, ab);
    HGroupElement tail = g.identity_element();
    tail.central = g.algebra().basis_product(1, 0);
    HGroupElement want =
        g.mul(g.mul(g.power(g.generator(0), 2), g.power(g.generator(1), 2)), tail);
    if (sq != want) return failed("(g1 g2)^2 != g1^2 g2^2 (v2 x v1)");
  }
  r.detail = std::to_string(groups.size()) + " groups pass the axiom samples";
  return r;
}

CheckResult check_alpha_quotient(int max_n, int samples, uint64_t seed) {
  CheckResult r{"alpha-quotient-module", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  std::vector<HGroup> groups;
  for (uint32_t pv : {3u, 5u}) {
    Prime p(pv);
    for (const Graph& g : graphs_up_to(std::min(max_n, 4))) {
      groups.emplace_back(HAlgebra::h_algebra(g, p));
    }
  }
  int per_group = std::max(1, (samples + static_cast<int>(groups.size()) - 1) /
                              static_cast<int>(groups.size()));
  for (size_t k = 0; k < groups.size(); ++k) {
    const HGroup& g = groups[k];
    RandomSource rng(seed ^ (k * 7046029254386353ull + 11));
    for (int i = 0; i < g.generator_count(); ++i) {
      MixedVector unit(ModulusProfile::uniform(g.prime(), g.generator_count(), 3));
      unit.set(i, 1);
      if (g.generator(i).alpha != unit) return failed("alpha map misses a unit");
    }
    for (int s = 0; s < per_group; ++s) {
      HGroupElement x = g.random_element(rng);
      HGroupElement y = g.random_element(rng);
      if (g.mul(x, y).alpha != x.alpha + y.alpha) {
        return failed("alpha is not additive under the product");
      }
      uint64_t c = rng.below(g.prime().pow(3));
      if (g.power(x, c).alpha != scaled(x.alpha, c)) {
        return failed("alpha is not scaled under powers");
      }
      HGroupElement central = x;
      for (size_t i = 0; i < central.alpha.size(); ++i) central.alpha.set(i, 0);
      if (g.commutator(central, y) != g.identity_element()) {
        return failed("an alpha-kernel element is not central");
      }
    }
  }
  r.detail = std::to_string(groups.size()) +
             " groups: alpha is a module quotient with central kernel";
  return r;
}

CheckResult check_gamma_degrees() {
  CheckResult r{"gamma-degrees", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  for (const auto& [name, t] : standard_group_corpus()) {
    int m = t.order();
    DiMultigraph gamma = build_gamma(t);
    int min_elem = std::numeric_limits<int>::max();
    int max_triple = 0;
    for (int v = 0; v < gamma.vertex_count(); ++v) {
      int d = gamma.weighted_degree(v);
      if (gamma.sort_of(v) == DiMultigraph::Sort::element) {
        min_elem = std::min(min_elem, d);
        continue;
      }
      max_triple = std::max(max_triple, d);
      int idx = v - m;
      int w = idx % m;
      int u = idx / m / m;
      int vv = idx / m % m;
      bool product = t.op(u, vv) == w;
      int want = product ? 4 : 2;
      if (d != want) {
        return failed(name + ": triple degree " + std::to_string(d) + " != " +
                      std::to_string(want));
      }
    }
    if (min_elem < m * m) {
      return failed(name + ": element degree below m^2");
    }
    if (min_elem <= max_triple) {
      return failed(name + ": sorts not separated by degree");
    }
  }
  r.detail = "triple degrees in {2,4}; element degrees >= m^2; sorts separated";
  return r;
}

CheckResult check_hom_functoriality() {
  CheckResult r{"hom-functoriality", true, ""};
  auto failed = [&r](std::string d) {
    r.passed = false;
    r.detail = std::move(d);
    return r;
  };
  CayleyGroup z8 = CayleyGroup::cyclic(8);
  CayleyGroup z4 = CayleyGroup::cyclic(4);
  std::vector<int> h1(8);
  for (int x = 0; x < 8; ++x) h1[x] = x % 4;
  std::vector<int> h2(4);
  for (int x = 0; x < 4; ++x) h2[x] = 2 * x % 4;
  std::vector<int> composite(8);
  for (int x = 0; x < 8; ++x) composite[x] = h2[h1[x]];
  std::vector<int> f1 = extend_homomorphism(h1, z8, z4);
  std::vector<int> f2 = extend_homomorphism(h2, z4, z4);
  std::vector<int> fc = extend_homomorphism(composite, z8, z4);
  for (size_t v = 0; v < fc.size(); ++v) {
    if (fc[v] != f2[f1[v]]) return failed("extension does not compose");
  }
  CayleyGroup z3 = CayleyGroup::cyclic(3);
  std::vector<int> fid = extend_homomorphism({0, 1, 2}, z3, z3);
  for (size_t v = 0; v < fid.size(); ++v) {
    if (fid[v] != static_cast<int>(v)) return failed("identity does not extend to identity");
  }
  r.detail = "extension composes and preserves identity";
  return r;
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "algebra") {
    known = true;
    out.push_back(check_modarith_axioms());
    out.push_back(check_graph_oracles());
    out.push_back(check_encode_simple_oracle());
    out.push_back(check_algebra_structure(opt.max_n, opt.seed));
    out.push_back(check_induced_iso_exhaustive());
    out.push_back(check_algebra_roundtrip(opt.p, opt.max_n, opt.seed));
  }
  if (all || suite == "group") {
    known = true;
    out.push_back(check_group_axioms(opt.max_n, 2000, opt.seed));
    out.push_back(check_alpha_quotient(opt.max_n, 2000, opt.seed));
    out.push_back(check_exponent_nilpotency(opt.max_n, 10000, opt.seed));
    out.push_back(check_transport_multiplicativity(opt.max_n, 1000, opt.seed));
    out.push_back(check_renewal_reconstruction(opt.max_n));
    out.push_back(check_presentation_soundness(opt.max_n));
    out.push_back(check_similarity_and_center(50, opt.max_n, opt.seed));
  }
  if (all || suite == "gamma") {
    known = true;
    out.push_back(check_gamma_degrees());
    out.push_back(check_gamma_group_agreement());
    out.push_back(check_hom_extension());
    out.push_back(check_hom_functoriality());
  }
  if (all || suite == "sizes") {
    known = true;
    out.push_back(check_size_bounds(opt.max_n));
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace hiso

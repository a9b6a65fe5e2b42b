#include "hiso/matrixwild.hpp"

#include <stdexcept>

namespace hiso {

std::optional<ModMatrix> simsim(const MatrixPair& p1, const MatrixPair& p2,
                                Prime p) {
  int n = p1.a.rows;
  if (p1.a.cols != n || p1.b.rows != n || p1.b.cols != n || p2.a.rows != n ||
      p2.a.cols != n || p2.b.rows != n || p2.b.cols != n) {
    throw std::invalid_argument("matrix pairs must be square and of equal size");
  }
  if (n > 3 || p.value() > 3) {
    throw std::invalid_argument("simsim is capped at n <= 3, p <= 3");
  }
  for (const ModMatrix* m : {&p1.a, &p1.b, &p2.a, &p2.b}) {
    if (m->modulus != p.value()) {
      throw std::invalid_argument("matrix entries must be reduced mod p");
    }
  }
  // S (A1, B1) S^{-1} = (A2, B2) checked multiplicatively: S A1 = A2 S.
  std::optional<ModMatrix> witness;
  for_each_invertible(
      n, p.value(),
      [&](const ModMatrix& s) {
        if (mat_mul(s, p1.a) == mat_mul(p2.a, s) &&
            mat_mul(s, p1.b) == mat_mul(p2.b, s)) {
          witness = s;
          return true;
        }
        return false;
      },
      /*identity_first=*/false);
  return witness;
}

uint64_t center_order_bound(const HGroup& g) {
  if (g.generator_count() < 3) {
    throw std::invalid_argument("center bound needs a graph on >= 3 vertices");
  }
  unsigned __int128 acc = 1;
  for (int q = 0; q < g.pair_count(); ++q) {
    acc *= g.algebra().central_profile()->modulus(q);
    if (acc > UINT64_MAX) {
      throw std::overflow_error("central span order exceeds 64 bits");
    }
  }
  uint64_t bound = static_cast<uint64_t>(acc);
  uint64_t p3 = g.prime().pow(3);
  if (bound < p3) {
    throw std::logic_error("central span unexpectedly smaller than p^3");
  }
  return bound;
}

}  // namespace hiso

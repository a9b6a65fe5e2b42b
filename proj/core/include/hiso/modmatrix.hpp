#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hiso/modarith.hpp"

namespace hiso {

/**
 * Dense square-or-rectangular matrix with entries reduced mod a single
 * modulus.  Row-major; at(i, j) is row i, column j.
 */
struct ModMatrix {
  int rows = 0;
  int cols = 0;
  uint32_t modulus = 1;
  std::vector<uint32_t> data;

  ModMatrix() = default;
  ModMatrix(int r, int c, uint32_t m);

  uint32_t at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  void set(int i, int j, uint64_t v) {
    data[static_cast<size_t>(i) * cols + j] = static_cast<uint32_t>(v % modulus);
  }

  static ModMatrix identity(int n, uint32_t m);
};

bool operator==(const ModMatrix& a, const ModMatrix& b);

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);

/// Determinant of a square matrix whose modulus is a prime p.
uint32_t det_mod_p(const ModMatrix& a, uint32_t p);

/// True when the matrix is invertible mod the prime p (entries are reduced
/// mod p first, so this also decides invertibility mod any power of p).
bool invertible_mod_p(const ModMatrix& a, uint32_t p);

/// Inverse of a square matrix over Z/pZ by Gauss-Jordan elimination; the
/// input entries must already be reduced mod p.  Throws when singular.
ModMatrix inverse_mod_p(const ModMatrix& a, uint32_t p);

/**
 * Visits every invertible n x n matrix over Z/pZ in lexicographic order of
 * the flattened entry list; with identity_first the identity matrix jumps
 * the queue (so searches that admit it prefer the trivial witness).  Stops
 * early when fn returns true and reports whether it did.
 */
bool for_each_invertible(int n, uint32_t p,
                         const std::function<bool(const ModMatrix&)>& fn,
                         bool identity_first = true);

/**
 * Matrix text format: first line "n p", then n rows of n entries.
 */
ModMatrix parse_matrix(const std::string& text);
std::string matrix_to_text(const ModMatrix& m);

}  // namespace hiso

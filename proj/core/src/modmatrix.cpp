#include "hiso/modmatrix.hpp"

#include <sstream>
#include <stdexcept>

#include "hiso/graph.hpp"  // ParseError

namespace hiso {

ModMatrix::ModMatrix(int r, int c, uint32_t m) : rows(r), cols(c), modulus(m) {
  if (r < 0 || c < 0) throw std::invalid_argument("matrix shape must be non-negative");
  if (m == 0) throw std::invalid_argument("matrix modulus must be positive");
  data.assign(static_cast<size_t>(r) * c, 0);
}

ModMatrix ModMatrix::identity(int n, uint32_t m) {
  ModMatrix a(n, n, m);
  for (int i = 0; i < n; ++i) a.set(i, i, 1 % m);
  return a;
}

bool operator==(const ModMatrix& a, const ModMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.modulus == b.modulus &&
         a.data == b.data;
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols != b.rows || a.modulus != b.modulus) {
    throw std::invalid_argument("matrix product shape or modulus mismatch");
  }
  ModMatrix c(a.rows, b.cols, a.modulus);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) {
      uint64_t s = 0;
      for (int k = 0; k < a.cols; ++k) {
        s += static_cast<uint64_t>(a.at(i, k)) * b.at(k, j);
      }
      c.set(i, j, s);
    }
  }
  return c;
}

uint32_t det_mod_p(const ModMatrix& a, uint32_t p) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant needs a square matrix");
  int n = a.rows;
  std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j) % p;
  }
  auto pow_mod = [p](uint64_t b, uint32_t e) {
    uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  uint64_t det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m[row][col] % p != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == -1) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = (p - det % p) % p;
    }
    uint64_t inv = pow_mod(m[col][col], p - 2);  // Fermat inverse
    det = det * m[col][col] % p;
    for (int row = col + 1; row < n; ++row) {
      uint64_t f = m[row][col] * inv % p;
      for (int j = col; j < n; ++j) {
        m[row][j] = (m[row][j] + (p - f) * m[col][j]) % p;
      }
    }
  }
  return static_cast<uint32_t>(det);
}

bool invertible_mod_p(const ModMatrix& a, uint32_t p) {
  return det_mod_p(a, p) != 0;
}

ModMatrix inverse_mod_p(const ModMatrix& a, uint32_t p) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse needs a square matrix");
  int n = a.rows;
  auto pow_mod = [p](uint64_t b, uint32_t e) {
    uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  // Augmented [a | I], reduced to [I | a^{-1}].
  std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j) % p;
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) throw std::invalid_argument("matrix is singular mod p");
    std::swap(m[col], m[pivot]);
    uint64_t inv = pow_mod(m[col][col], p - 2);
    for (int j = 0; j < 2 * n; ++j) m[col][j] = m[col][j] * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      uint64_t f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) {
        m[r][j] = (m[r][j] + (p - f) * m[col][j]) % p;
      }
    }
  }
  ModMatrix out(n, n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.set(i, j, m[i][n + j]);
  }
  return out;
}

bool for_each_invertible(int n, uint32_t p,
                         const std::function<bool(const ModMatrix&)>& fn,
                         bool identity_first) {
  ModMatrix id = ModMatrix::identity(n, p);
  if (identity_first && fn(id)) return true;
  ModMatrix m = id;
  size_t cells = static_cast<size_t>(n) * n;
  std::vector<uint32_t> entry(cells, 0);
  while (true) {
    m.data = entry;
    bool skip = identity_first && m == id;
    if (!skip && invertible_mod_p(m, p) && fn(m)) return true;
    size_t i = cells;
    while (i > 0 && entry[i - 1] == p - 1) entry[--i] = 0;
    if (i == 0) return false;
    entry[i - 1]++;
  }
}

ModMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    ++lineno;
    throw ParseError("line " + std::to_string(lineno) + ": unexpected end of matrix");
  };
  std::istringstream head(next_line());
  long n = 0, p = 0;
  if (!(head >> n >> p) || n < 1) {
    throw ParseError("line " + std::to_string(lineno) + ": expected 'n p'");
  }
  uint32_t modulus = Prime(static_cast<uint32_t>(p)).value();
  ModMatrix m(static_cast<int>(n), static_cast<int>(n), modulus);
  for (int i = 0; i < n; ++i) {
    std::istringstream row(next_line());
    for (int j = 0; j < n; ++j) {
      long v = 0;
      if (!(row >> v) || v < 0) {
        throw ParseError("line " + std::to_string(lineno) + ": expected " +
                         std::to_string(n) + " non-negative entries");
      }
      m.set(i, j, static_cast<uint64_t>(v));
    }
  }
  return m;
}

std::string matrix_to_text(const ModMatrix& m) {
  std::ostringstream out;
  out << m.rows << " " << m.modulus << "\n";
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      out << m.at(i, j) << (j + 1 == m.cols ? "" : " ");
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hiso

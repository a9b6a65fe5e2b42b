#include "hiso/cayley.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "hiso/graph.hpp"  // ParseError

namespace hiso {

CayleyGroup::CayleyGroup(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
  int m = static_cast<int>(table_.size());
  if (m == 0) throw std::invalid_argument("group must be non-empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("multiplication table must be square");
    }
    for (int v : row) {
      if (v < 0 || v >= m) throw std::invalid_argument("table entry out of range");
    }
  }
  identity_ = -1;
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x) {
      ok = table_[e][x] == x && table_[x][e] == x;
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ == -1) throw std::invalid_argument("table has no identity element");
  inverse_.assign(m, -1);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (table_[x][y] == identity_ && table_[y][x] == identity_) {
        inverse_[x] = y;
        break;
      }
    }
    if (inverse_[x] == -1) {
      throw std::invalid_argument("element " + std::to_string(x + 1) +
                                  " has no two-sided inverse");
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]]) {
          throw std::invalid_argument("table is not associative");
        }
      }
    }
  }
}

CayleyGroup CayleyGroup::from_table(std::vector<std::vector<int>> table) {
  return CayleyGroup(std::move(table));
}

CayleyGroup CayleyGroup::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
  }
  return CayleyGroup(std::move(t));
}

CayleyGroup CayleyGroup::direct_product(const CayleyGroup& a, const CayleyGroup& b) {
  int ma = a.order(), mb = b.order();
  int m = ma * mb;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  auto id = [mb](int x, int y) { return x * mb + y; };
  for (int x1 = 0; x1 < ma; ++x1) {
    for (int y1 = 0; y1 < mb; ++y1) {
      for (int x2 = 0; x2 < ma; ++x2) {
        for (int y2 = 0; y2 < mb; ++y2) {
          t[id(x1, y1)][id(x2, y2)] = id(a.op(x1, x2), b.op(y1, y2));
        }
      }
    }
  }
  return CayleyGroup(std::move(t));
}

CayleyGroup CayleyGroup::symmetric3() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> base{0, 1, 2};
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      std::array<int, 3> comp;
      for (int k = 0; k < 3; ++k) comp[k] = perms[x][perms[y][k]];
      t[x][y] = static_cast<int>(
          std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  }
  return CayleyGroup(std::move(t));
}

CayleyGroup CayleyGroup::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
  // Element r^a s^b encoded as a + n*b with s r = r^{-1} s.
  int m = 2 * n;
  auto id = [n](int a, int b) { return a + n * b; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a1 = 0; a1 < n; ++a1) {
    for (int b1 = 0; b1 < 2; ++b1) {
      for (int a2 = 0; a2 < n; ++a2) {
        for (int b2 = 0; b2 < 2; ++b2) {
          int a = b1 == 0 ? (a1 + a2) % n : (a1 - a2 % n + n) % n;
          t[id(a1, b1)][id(a2, b2)] = id(a, (b1 + b2) % 2);
        }
      }
    }
  }
  return CayleyGroup(std::move(t));
}

CayleyGroup CayleyGroup::quaternion8() {
  // Elements 1, -1, i, -i, j, -j, k, -k as 0..7; sign bit is the low bit.
  auto enc = [](int unit, int neg) { return unit * 2 + neg; };
  // Unit products with signs: table over {1, i, j, k}.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int u1 = 0; u1 < 4; ++u1) {
    for (int s1 = 0; s1 < 2; ++s1) {
      for (int u2 = 0; u2 < 4; ++u2) {
        for (int s2 = 0; s2 < 2; ++s2) {
          int u = unit_mul[u1][u2];
          int s = (s1 + s2 + sign_mul[u1][u2]) % 2;
          t[enc(u1, s1)][enc(u2, s2)] = enc(u, s);
        }
      }
    }
  }
  return CayleyGroup(std::move(t));
}

CayleyGroup CayleyGroup::relabeled(const std::vector<int>& perm) const {
  int m = order();
  if (static_cast<int>(perm.size()) != m) {
    throw std::invalid_argument("relabeling permutation has wrong size");
  }
  std::vector<bool> seen(m, false);
  for (int v : perm) {
    if (v < 0 || v >= m || seen[v]) {
      throw std::invalid_argument("relabeling is not a permutation");
    }
    seen[v] = true;
  }
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) t[perm[x]][perm[y]] = perm[table_[x][y]];
  }
  return CayleyGroup(std::move(t));
}

int CayleyGroup::element_order(int u) const {
  int k = 1;
  int x = u;
  while (x != identity_) {
    x = op(x, u);
    ++k;
  }
  return k;
}

CayleyGroup CayleyGroup::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    ++lineno;
    throw ParseError("line " + std::to_string(lineno) + ": unexpected end of table");
  };
  std::istringstream head(next_line());
  long m = 0;
  if (!(head >> m) || m < 1) {
    throw ParseError("line " + std::to_string(lineno) + ": expected the group order");
  }
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (long i = 0; i < m; ++i) {
    std::istringstream row(next_line());
    for (long j = 0; j < m; ++j) {
      long v = 0;
      if (!(row >> v) || v < 1 || v > m) {
        throw ParseError("line " + std::to_string(lineno) + ": expected " +
                         std::to_string(m) + " entries in 1.." + std::to_string(m));
      }
      t[i][j] = static_cast<int>(v - 1);
    }
    std::string extra;
    if (row >> extra) {
      throw ParseError("line " + std::to_string(lineno) + ": row has more than " +
                       std::to_string(m) + " entries");
    }
  }
  try {
    return CayleyGroup::from_table(std::move(t));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("table is not a group: ") + e.what());
  }
}

std::string CayleyGroup::to_text() const {
  std::ostringstream out;
  int m = order();
  out << m << "\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out << table_[i][j] + 1 << (j + 1 == m ? "" : " ");
    out << "\n";
  }
  return out.str();
}

bool is_homomorphism(const std::vector<int>& h, const CayleyGroup& g,
                     const CayleyGroup& target) {
  if (static_cast<int>(h.size()) != g.order()) return false;
  for (int v : h) {
    if (v < 0 || v >= target.order()) return false;
  }
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      if (h[g.op(x, y)] != target.op(h[x], h[y])) return false;
    }
  }
  return true;
}

namespace {

/// Greedy generating set: repeatedly adjoin the lowest element outside the
/// subgroup generated so far.
std::vector<int> generating_set(const CayleyGroup& g) {
  int m = g.order();
  std::vector<bool> in(m, false);
  in[g.identity()] = true;
  int covered = 1;
  std::vector<int> gens;
  while (covered < m) {
    int pick = -1;
    for (int x = 0; x < m; ++x) {
      if (!in[x]) {
        pick = x;
        break;
      }
    }
    gens.push_back(pick);
    // Close under multiplication with the current subgroup.
    std::vector<int> frontier{pick};
    in[pick] = true;
    ++covered;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int f : frontier) {
        for (int x = 0; x < m; ++x) {
          if (!in[x]) continue;
          for (int prod : {g.op(f, x), g.op(x, f)}) {
            if (!in[prod]) {
              in[prod] = true;
              ++covered;
              next.push_back(prod);
            }
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

/**
 * Extends a partial generator assignment to a full homomorphism by closure:
 * every defined pair multiplies to a defined image, and any clash kills the
 * candidate.  Returns the full map when it closes into a bijection.
 */
std::optional<std::vector<int>> close_assignment(const CayleyGroup& g1,
                                                 const CayleyGroup& g2,
                                                 const std::vector<int>& gens,
                                                 const std::vector<int>& images) {
  int m = g1.order();
  std::vector<int> map(m, -1);
  map[g1.identity()] = g2.identity();
  std::vector<int> known{g1.identity()};
  for (size_t k = 0; k < gens.size(); ++k) {
    if (map[gens[k]] != -1) {
      if (map[gens[k]] != images[k]) return std::nullopt;
      continue;
    }
    map[gens[k]] = images[k];
    known.push_back(gens[k]);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t a = 0; a < known.size(); ++a) {
      for (size_t b = 0; b < known.size(); ++b) {
        int x = known[a], y = known[b];
        int xy = g1.op(x, y);
        int img = g2.op(map[x], map[y]);
        if (map[xy] == -1) {
          map[xy] = img;
          known.push_back(xy);
          grew = true;
        } else if (map[xy] != img) {
          return std::nullopt;
        }
      }
    }
  }
  if (static_cast<int>(known.size()) != m) return std::nullopt;
  std::vector<bool> hit(m, false);
  for (int v : map) {
    if (v == -1 || hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return map;
}

bool assign(const CayleyGroup& g1, const CayleyGroup& g2,
            const std::vector<int>& gens, std::vector<int>& images, size_t k,
            std::optional<std::vector<int>>& result) {
  if (k == gens.size()) {
    auto full = close_assignment(g1, g2, gens, images);
    if (full) {
      result = std::move(full);
      return true;
    }
    return false;
  }
  int want_order = g1.element_order(gens[k]);
  for (int candidate = 0; candidate < g2.order(); ++candidate) {
    if (g2.element_order(candidate) != want_order) continue;
    images[k] = candidate;
    if (assign(g1, g2, gens, images, k + 1, result)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> group_iso_small(const CayleyGroup& g1,
                                                const CayleyGroup& g2) {
  if (g1.order() > 16 || g2.order() > 16) {
    throw std::invalid_argument("group_iso_small is capped at order 16");
  }
  if (g1.order() != g2.order()) return std::nullopt;
  auto gens = generating_set(g1);
  std::vector<int> images(gens.size(), -1);
  std::optional<std::vector<int>> result;
  assign(g1, g2, gens, images, 0, result);
  return result;
}

std::vector<std::pair<std::string, CayleyGroup>> standard_group_corpus() {
  std::vector<std::pair<std::string, CayleyGroup>> corpus;
  for (int m = 3; m <= 8; ++m) {
    corpus.emplace_back("Z" + std::to_string(m), CayleyGroup::cyclic(m));
  }
  auto z2 = CayleyGroup::cyclic(2);
  corpus.emplace_back("Z2xZ2", CayleyGroup::direct_product(z2, z2));
  corpus.emplace_back("Z2xZ4", CayleyGroup::direct_product(z2, CayleyGroup::cyclic(4)));
  corpus.emplace_back("Z2xZ2xZ2",
                      CayleyGroup::direct_product(z2, CayleyGroup::direct_product(z2, z2)));
  corpus.emplace_back("S3", CayleyGroup::symmetric3());
  corpus.emplace_back("D4", CayleyGroup::dihedral(4));
  corpus.emplace_back("Q8", CayleyGroup::quaternion8());
  return corpus;
}

}  // namespace hiso

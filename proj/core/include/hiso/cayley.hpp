#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hiso {

/**
 * A finite group given by its multiplication table.  Element k is row and
 * column k (0-based).  Construction validates the full group axioms:
 * closure, a two-sided identity, two-sided inverses and associativity by
 * exhaustive triple scan, so an instance is a group by construction.
 */
class CayleyGroup {
 public:
  static CayleyGroup from_table(std::vector<std::vector<int>> table);

  static CayleyGroup cyclic(int m);
  static CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b);
  /// Symmetric group on 3 letters, order 6.
  static CayleyGroup symmetric3();
  /// Dihedral group of order 2n.
  static CayleyGroup dihedral(int n);
  /// Quaternion group, order 8.
  static CayleyGroup quaternion8();

  /// Table conjugated by a permutation of the element labels.
  CayleyGroup relabeled(const std::vector<int>& perm) const;

  int order() const { return static_cast<int>(table_.size()); }
  int op(int u, int v) const { return table_[u][v]; }
  int identity() const { return identity_; }
  int inverse(int u) const { return inverse_[u]; }
  int element_order(int u) const;

  const std::vector<std::vector<int>>& table() const { return table_; }

  /**
   * Text format: first line is the order m, then m rows of m entries,
   * 1-based; entry (i, j) is the product of elements i and j.
   */
  static CayleyGroup parse(const std::string& text);
  std::string to_text() const;

 private:
  explicit CayleyGroup(std::vector<std::vector<int>> table);

  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// True when h (element map, h[u] in H) satisfies h[u*v] = h[u]*h[v].
bool is_homomorphism(const std::vector<int>& h, const CayleyGroup& g,
                     const CayleyGroup& target);

/**
 * Brute-force isomorphism search on multiplication tables of order <= 16:
 * picks a generating set of the first group, backtracks over images with
 * matching element orders, and closes each candidate assignment into a full
 * map, rejecting on any multiplication clash.  Returns an element bijection
 * or nothing.  Throws when either group is larger than 16.
 */
std::optional<std::vector<int>> group_iso_small(const CayleyGroup& g1,
                                                const CayleyGroup& g2);

/// The fixed corpus used by the oracle-agreement checks: cyclic groups of
/// order 3..8, the three non-cyclic abelian groups of order <= 8, and the
/// three non-abelian groups of order <= 8.
std::vector<std::pair<std::string, CayleyGroup>> standard_group_corpus();

}  // namespace hiso

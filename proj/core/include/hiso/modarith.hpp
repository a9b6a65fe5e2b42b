#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hiso {

/**
 * An odd prime p with 3 <= p < 1024, so that p^3 fits comfortably in
 * 32 bits and products of two residues fit in 64 bits.
 */
class Prime {
 public:
  explicit Prime(uint32_t p);

  uint32_t value() const { return p_; }

  /// p^k for k in [0, 3].
  uint32_t pow(int k) const;

 private:
  uint32_t p_;
};

bool operator==(const Prime& a, const Prime& b);
bool operator!=(const Prime& a, const Prime& b);

/**
 * A canonical residue: value in [0, modulus).  The modulus is carried with
 * the value; mixing residues of different moduli is a usage error and throws.
 */
struct Residue {
  uint32_t value = 0;
  uint32_t modulus = 1;

  Residue() = default;
  Residue(uint64_t v, uint32_t m);
};

Residue res_add(const Residue& a, const Residue& b);
Residue res_sub(const Residue& a, const Residue& b);
Residue res_mul(const Residue& a, const Residue& b);
Residue res_neg(const Residue& a);

Residue operator+(const Residue& a, const Residue& b);
Residue operator-(const Residue& a, const Residue& b);
Residue operator*(const Residue& a, const Residue& b);
Residue operator-(const Residue& a);
bool operator==(const Residue& a, const Residue& b);
bool operator!=(const Residue& a, const Residue& b);

/// Additive order of a residue: modulus / gcd(value, modulus).
uint32_t res_order(const Residue& a);

/**
 * Immutable list of per-coordinate moduli, each a power p^k with k in
 * {1, 2, 3}.  Profiles are shared between all vectors of the same shape so
 * that shape compatibility is a pointer comparison in the common case.
 */
class ModulusProfile {
 public:
  ModulusProfile(Prime p, std::vector<uint32_t> moduli);

  size_t size() const { return moduli_.size(); }
  uint32_t modulus(size_t i) const { return moduli_[i]; }
  const std::vector<uint32_t>& moduli() const { return moduli_; }
  Prime prime() const { return p_; }

  bool same_shape(const ModulusProfile& other) const;

  /// n coordinates, all of modulus p^k.
  static std::shared_ptr<const ModulusProfile> uniform(Prime p, size_t n, int k);

 private:
  Prime p_;
  std::vector<uint32_t> moduli_;
};

using ProfilePtr = std::shared_ptr<const ModulusProfile>;

/**
 * A vector whose i-th coordinate lives in Z/m_i for the moduli of a shared
 * profile.  Addition is componentwise; a scalar c acts componentwise as
 * (c mod m_i) * v_i, which is well defined for any integer representative
 * of c mod p^3 because every m_i divides p^3.
 */
class MixedVector {
 public:
  MixedVector() = default;
  explicit MixedVector(ProfilePtr profile);  // zero vector
  MixedVector(ProfilePtr profile, std::vector<uint32_t> values);

  const ProfilePtr& profile() const { return profile_; }
  size_t size() const { return values_.size(); }
  uint32_t value(size_t i) const { return values_[i]; }
  Residue at(size_t i) const;
  void set(size_t i, uint64_t v);

  bool is_zero() const;

  /// Least k >= 1 with k*v = 0; always a power of the profile prime.
  uint64_t additive_order() const;

  MixedVector& operator+=(const MixedVector& other);
  MixedVector& operator-=(const MixedVector& other);

 private:
  ProfilePtr profile_;
  std::vector<uint32_t> values_;
};

MixedVector vec_add(const MixedVector& a, const MixedVector& b);
MixedVector vec_sub(const MixedVector& a, const MixedVector& b);
MixedVector operator+(const MixedVector& a, const MixedVector& b);
MixedVector operator-(const MixedVector& a, const MixedVector& b);
MixedVector operator-(const MixedVector& a);
bool operator==(const MixedVector& a, const MixedVector& b);
bool operator!=(const MixedVector& a, const MixedVector& b);

/// c * v for a raw scalar; each coordinate is (c mod m_i) * v_i mod m_i.
MixedVector scaled(const MixedVector& v, uint64_t c);

/// c * v where c must be a residue mod p^3 for the profile prime of v.
MixedVector scalar_mul(const Residue& c, const MixedVector& v);

}  // namespace hiso

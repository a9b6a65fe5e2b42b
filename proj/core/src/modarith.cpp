#include "hiso/modarith.hpp"

#include <numeric>
#include <stdexcept>

namespace hiso {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) {
    throw std::invalid_argument("residue modulus mismatch: " +
                                std::to_string(a.modulus) + " vs " +
                                std::to_string(b.modulus));
  }
}

}  // namespace

Prime::Prime(uint32_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("prime must be an odd prime >= 3, got " +
                                std::to_string(p));
  }
  if (p >= 1024) {
    throw std::invalid_argument("prime too large for cube arithmetic: " +
                                std::to_string(p));
  }
}

uint32_t Prime::pow(int k) const {
  if (k < 0 || k > 3) throw std::invalid_argument("prime power exponent out of range");
  uint32_t r = 1;
  for (int i = 0; i < k; ++i) r *= p_;
  return r;
}

bool operator==(const Prime& a, const Prime& b) { return a.value() == b.value(); }
bool operator!=(const Prime& a, const Prime& b) { return !(a == b); }

Residue::Residue(uint64_t v, uint32_t m) : modulus(m) {
  if (m == 0) throw std::invalid_argument("residue modulus must be positive");
  value = static_cast<uint32_t>(v % m);
}

Residue res_add(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(static_cast<uint64_t>(a.value) + b.value, a.modulus);
}

Residue res_sub(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(static_cast<uint64_t>(a.value) + a.modulus - b.value, a.modulus);
}

Residue res_mul(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(static_cast<uint64_t>(a.value) * b.value, a.modulus);
}

Residue res_neg(const Residue& a) {
  return Residue(static_cast<uint64_t>(a.modulus) - a.value, a.modulus);
}

Residue operator+(const Residue& a, const Residue& b) { return res_add(a, b); }
Residue operator-(const Residue& a, const Residue& b) { return res_sub(a, b); }
Residue operator*(const Residue& a, const Residue& b) { return res_mul(a, b); }
Residue operator-(const Residue& a) { return res_neg(a); }

bool operator==(const Residue& a, const Residue& b) {
  return a.modulus == b.modulus && a.value == b.value;
}
bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

uint32_t res_order(const Residue& a) {
  return a.modulus / std::gcd(a.value, a.modulus);
}

ModulusProfile::ModulusProfile(Prime p, std::vector<uint32_t> moduli)
    : p_(p), moduli_(std::move(moduli)) {
  for (uint32_t m : moduli_) {
    if (m != p.pow(1) && m != p.pow(2) && m != p.pow(3)) {
      throw std::invalid_argument("profile modulus " + std::to_string(m) +
                                  " is not p, p^2 or p^3 for p = " +
                                  std::to_string(p.value()));
    }
  }
}

bool ModulusProfile::same_shape(const ModulusProfile& other) const {
  return p_ == other.p_ && moduli_ == other.moduli_;
}

ProfilePtr ModulusProfile::uniform(Prime p, size_t n, int k) {
  return std::make_shared<const ModulusProfile>(
      p, std::vector<uint32_t>(n, p.pow(k)));
}

MixedVector::MixedVector(ProfilePtr profile)
    : profile_(std::move(profile)), values_(profile_ ? profile_->size() : 0, 0) {
  if (!profile_) throw std::invalid_argument("mixed vector needs a profile");
}

MixedVector::MixedVector(ProfilePtr profile, std::vector<uint32_t> values)
    : profile_(std::move(profile)), values_(std::move(values)) {
  if (!profile_) throw std::invalid_argument("mixed vector needs a profile");
  if (values_.size() != profile_->size()) {
    throw std::invalid_argument("mixed vector length does not match profile");
  }
  for (size_t i = 0; i < values_.size(); ++i) values_[i] %= profile_->modulus(i);
}

Residue MixedVector::at(size_t i) const {
  return Residue(values_[i], profile_->modulus(i));
}

void MixedVector::set(size_t i, uint64_t v) {
  values_[i] = static_cast<uint32_t>(v % profile_->modulus(i));
}

bool MixedVector::is_zero() const {
  for (uint32_t v : values_) {
    if (v != 0) return false;
  }
  return true;
}

uint64_t MixedVector::additive_order() const {
  uint64_t order = 1;
  for (size_t i = 0; i < values_.size(); ++i) {
    order = std::lcm<uint64_t>(order, res_order(at(i)));
  }
  return order;
}

namespace {

void require_same_profile(const MixedVector& a, const MixedVector& b) {
  if (a.profile() == b.profile()) return;  // shared pointer fast path
  if (a.profile() && b.profile() && a.profile()->same_shape(*b.profile())) return;
  throw std::invalid_argument("mixed vector profile mismatch");
}

}  // namespace

MixedVector& MixedVector::operator+=(const MixedVector& other) {
  require_same_profile(*this, other);
  for (size_t i = 0; i < values_.size(); ++i) {
    values_[i] = static_cast<uint32_t>(
        (static_cast<uint64_t>(values_[i]) + other.values_[i]) %
        profile_->modulus(i));
  }
  return *this;
}

MixedVector& MixedVector::operator-=(const MixedVector& other) {
  require_same_profile(*this, other);
  for (size_t i = 0; i < values_.size(); ++i) {
    values_[i] = static_cast<uint32_t>(
        (static_cast<uint64_t>(values_[i]) + profile_->modulus(i) -
         other.values_[i]) %
        profile_->modulus(i));
  }
  return *this;
}

MixedVector vec_add(const MixedVector& a, const MixedVector& b) {
  MixedVector r = a;
  r += b;
  return r;
}

MixedVector vec_sub(const MixedVector& a, const MixedVector& b) {
  MixedVector r = a;
  r -= b;
  return r;
}

MixedVector operator+(const MixedVector& a, const MixedVector& b) { return vec_add(a, b); }
MixedVector operator-(const MixedVector& a, const MixedVector& b) { return vec_sub(a, b); }

MixedVector operator-(const MixedVector& a) {
  MixedVector r(a.profile());
  r -= a;
  return r;
}

bool operator==(const MixedVector& a, const MixedVector& b) {
  if (!a.profile() || !b.profile()) return a.profile() == b.profile();
  if (!a.profile()->same_shape(*b.profile())) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.value(i) != b.value(i)) return false;
  }
  return true;
}

bool operator!=(const MixedVector& a, const MixedVector& b) { return !(a == b); }

MixedVector scaled(const MixedVector& v, uint64_t c) {
  MixedVector r(v.profile());
  for (size_t i = 0; i < v.size(); ++i) {
    uint32_t m = v.profile()->modulus(i);
    r.set(i, (c % m) * v.value(i));
  }
  return r;
}

MixedVector scalar_mul(const Residue& c, const MixedVector& v) {
  uint32_t cube = v.profile()->prime().pow(3);
  if (c.modulus != cube) {
    throw std::invalid_argument("scalar must be a residue mod p^3, got modulus " +
                                std::to_string(c.modulus));
  }
  return scaled(v, c.value);
}

}  // namespace hiso

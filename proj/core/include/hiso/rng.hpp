#pragma once

#include <cstdint>
#include <random>

namespace hiso {

/**
 * Deterministic random source.  mt19937_64 output is pinned by the
 * standard, so seeded runs reproduce exactly across platforms; the modulo
 * bias is immaterial for the small ranges used here.
 */
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }
  uint64_t below(uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hiso

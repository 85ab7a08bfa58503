#pragma once

#include <cstdint>
#include <random>

#include "hyperreg/numeric.hpp"

namespace hyperreg {

// Seedable deterministic random stream. Bounded draws, bit draws and
// exact-rational Bernoulli trials are implemented on top of the raw engine so
// that results are reproducible across platforms and standard-library
// versions (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, bound). Masked rejection, unbiased.
  uint64_t below(uint64_t bound);

  bool next_bit();

  // Exact Bernoulli(p) for rational p: compares a random bit stream against
  // the binary expansion of p, so no floating-point rounding enters the
  // acceptance probability. Expected bits consumed: 2.
  bool bernoulli(const BigRat& p);

  // Independent child stream for replica `index` (splitmix64 mix).
  static uint64_t child_seed(uint64_t base, uint64_t index);

  static const char* algorithm_name() { return "mt19937_64"; }

 private:
  std::mt19937_64 eng_;
  uint64_t bit_buf_ = 0;
  int bits_left_ = 0;
};

}  // namespace hyperreg

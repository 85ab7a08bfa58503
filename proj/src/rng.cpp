#include "hyperreg/rng.hpp"

#include <bit>
#include <stdexcept>

namespace hyperreg {

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  if (bound == 1) return 0;
  const int width = 64 - std::countl_zero(bound - 1);
  const uint64_t mask = (width == 64) ? ~uint64_t{0} : ((uint64_t{1} << width) - 1);
  for (;;) {
    uint64_t r = eng_() & mask;
    if (r < bound) return r;
  }
}

bool Rng::next_bit() {
  if (bits_left_ == 0) {
    bit_buf_ = eng_();
    bits_left_ = 64;
  }
  bool b = bit_buf_ & 1;
  bit_buf_ >>= 1;
  --bits_left_;
  return b;
}

bool Rng::bernoulli(const BigRat& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  BigInt num = numerator(p);
  const BigInt den = denominator(p);
  // Walk the binary expansions of U ~ Uniform[0,1) and p until they differ.
  for (;;) {
    num <<= 1;
    const bool p_digit = num >= den;
    if (p_digit) num -= den;
    const bool u_digit = next_bit();
    if (u_digit != p_digit) return p_digit;  // U < p iff p has the 1 bit
    if (num == 0) return false;              // p's expansion ended; U >= p
  }
}

uint64_t Rng::child_seed(uint64_t base, uint64_t index) {
  uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hyperreg

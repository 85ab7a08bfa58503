#include "hyperreg/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperreg {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long r) {
  if (r > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.backend().data(), n, r);
  return b;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), e);
  return r;
}

BigInt falling_factorial(const BigInt& x, unsigned long a) {
  BigInt r = 1;
  for (unsigned long i = 0; i < a; ++i) r *= x - static_cast<long>(i);
  return r;
}

BigInt multinomial(std::span<const long long> parts) {
  long long total = 0;
  for (long long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
  }
  BigInt r = factorial(static_cast<unsigned long>(total));
  for (long long p : parts) r /= factorial(static_cast<unsigned long>(p));
  return r;
}

long long isqrt_floor(long long v) {
  if (v < 0) throw std::invalid_argument("isqrt_floor: negative input");
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

BigFloat to_big_float(const BigRat& r, unsigned digits) {
  BigFloat num(numerator(r), digits);
  BigFloat den(denominator(r), digits);
  return num / den;
}

BigFloat to_big_float(const BigInt& v, unsigned digits) { return BigFloat(v, digits); }

}  // namespace hyperreg

#pragma once

#include <cstdint>
#include <span>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace hyperreg {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;
// Variable-precision float; precision is set per value in decimal digits.
using BigFloat = boost::multiprecision::mpfr_float;

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long r);
BigInt int_pow(const BigInt& base, unsigned long e);

// (x)_a = x(x-1)...(x-a+1)
BigInt falling_factorial(const BigInt& x, unsigned long a);

// (sum parts)! / prod(parts!)
BigInt multinomial(std::span<const long long> parts);

// floor(sqrt(v)), exact for v >= 0
long long isqrt_floor(long long v);

BigFloat to_big_float(const BigRat& r, unsigned digits);
BigFloat to_big_float(const BigInt& v, unsigned digits);

}  // namespace hyperreg

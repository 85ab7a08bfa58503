#include "hyperreg/params.hpp"

namespace hyperreg {

Params Params::create(int n, int d, int k) {
  if (n <= 0 || d <= 0) throw DomainError("n and d must be positive");
  if (k < 3) throw DomainError("k must be at least 3 (the k = 2 graph case is out of scope)");
  if (n < k) throw DomainError("need n >= k");
  const long long nd = static_cast<long long>(n) * d;
  if (nd % k != 0) throw DomainError("k must divide n*d");
  Params p;
  p.n = n;
  p.d = d;
  p.k = k;
  p.m = nd / k;
  p.outside_regime = (k == 3) ? (static_cast<long long>(d) * d >= n) : (d >= n);
  return p;
}

LPolicy LPolicy::kd_omega(int omega) {
  if (omega <= 0) throw DomainError("kd-omega policy needs a positive omega");
  return {Kind::KdOmega, omega};
}

long long LPolicy::loop_cap(const Params& p) const {
  switch (kind) {
    case Kind::SqrtND:
      return isqrt_floor(p.nd());
    case Kind::KdOmega:
      return static_cast<long long>(p.k) * p.d + omega;
  }
  return 0;
}

std::string LPolicy::describe() const {
  switch (kind) {
    case Kind::SqrtND:
      return "sqrt";
    case Kind::KdOmega:
      return "kd-omega:" + std::to_string(omega);
  }
  return "?";
}

}  // namespace hyperreg

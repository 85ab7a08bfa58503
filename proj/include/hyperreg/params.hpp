#pragma once

#include <stdexcept>
#include <string>

#include "hyperreg/numeric.hpp"

namespace hyperreg {

// Invalid instance parameters or verification-level inconsistencies.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive routine was asked to exceed its configured cost cap.
struct CostGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A randomized routine ran out of its restart budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance description: n vertices of degree d, edges of size k, m = nd/k.
struct Params {
  int n = 0;
  int d = 0;
  int k = 0;
  long long m = 0;
  // d >= n^kappa, where kappa(3) = 1/2 and kappa(k>=4) = 1. Informational:
  // the enumeration formula's error term does not vanish in this regime.
  bool outside_regime = false;

  static Params create(int n, int d, int k);

  long long nd() const { return static_cast<long long>(n) * d; }
  bool kappa_is_half() const { return k == 3; }
  BigRat kappa() const { return kappa_is_half() ? BigRat(1, 2) : BigRat(1); }
};

// Cap L on the number of loops an E-member may contain.
struct LPolicy {
  enum class Kind { SqrtND, KdOmega };

  Kind kind = Kind::SqrtND;
  int omega = 0;

  static LPolicy sqrt_nd() { return {}; }
  static LPolicy kd_omega(int omega);

  long long loop_cap(const Params& p) const;
  std::string describe() const;
};

struct CostGuard {
  BigInt max_perms = 10'000'000;        // cap on |P| for full permutation scans
  long long max_edge_choices = 10'000;  // cap on C(n,k) for the edge-set oracle
};

}  // namespace hyperreg

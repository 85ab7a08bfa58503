#pragma once

#include "hyperreg/generator.hpp"
#include "hyperreg/stats.hpp"

namespace hyperreg {

struct IdentityRow {
  int level = 0;       // l, compared against l-1
  BigInt sum_f;        // sum of F(y) over E_l
  BigInt sum_b;        // sum of B(z) over E_{l-1}
  bool equal = false;
};

struct IdentityReport {
  Params params;
  long long cap = 0;
  std::vector<IdentityRow> rows;  // one per 1 <= l <= L
  bool all_equal = true;
};

// Double-counting of switchable pairs: sum F over E_l must equal sum B over
// E_{l-1}, exactly, for every level.
IdentityReport verify_identity(const Params& p, const LPolicy& pol,
                               const CostGuard& guard);

struct BoundsReport {
  Params params;
  long long cap = 0;
  BigInt perms_scanned;
  long long f_violations = 0;  // F(y) > F_l
  long long b_violations = 0;  // B(y) > B
  bool injectivity_ok = true;  // distinct ops gave distinct permutations
};

// Proposition-2 bounds plus op-injectivity, exhaustively.
BoundsReport verify_bounds(const Params& p, const LPolicy& pol, const CostGuard& guard);

struct UniformityReport {
  Params params;
  long long n_classes = 0;
  long long n_samples = 0;
  BigRat delta1;
  bool delta1_degenerate = false;
  ChiSquareResult chi;
  uint64_t seed = 0;
  bool pass = false;  // p_value > threshold
  double threshold = 1e-3;
};

// Generator exactness check: enumerate all simple hypergraphs, draw
// max(min_samples, per_class * C) exact samples and chi-square the counts.
UniformityReport verify_uniformity(const Params& p, const LPolicy& pol, uint64_t seed,
                                   const CostGuard& guard, long long min_samples = 1000,
                                   long long per_class = 50, double threshold = 1e-3);

}  // namespace hyperreg

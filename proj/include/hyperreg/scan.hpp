#pragma once

#include <vector>

#include "hyperreg/perm.hpp"
#include "hyperreg/switching.hpp"

namespace hyperreg {

struct ScanOptions {
  bool switch_counts = false;     // accumulate F(y)/B(y) aggregates per level
  bool check_injectivity = false; // distinct forward ops must yield distinct results
};

struct LevelAgg {
  BigInt size = 0;
  // F over E_l (l >= 1 only), B over E_l when l+1 <= L. -1 = nothing seen.
  BigInt sum_f = 0, sum_b = 0;
  long long min_f = -1, max_f = -1;
  long long min_b = -1, max_b = -1;
};

struct ScanResult {
  Params params;
  long long cap = 0;
  BigInt p_size = 0;  // permutations iterated
  BigInt e_size = 0;
  std::vector<LevelAgg> levels;  // index l = 0..cap

  // Whole-of-P tallies (not restricted to E).
  BigInt total_good_loops = 0;
  BigInt total_loop_blocks = 0;
  BigInt equal_block_pairs = 0;  // sum over perms of coincident block pairs
  BigInt perms_with_mult3 = 0;
  BigInt perms_with_double2 = 0;
  BigInt perms_with_multi_edge = 0;
  BigInt perms_tail_exceed = 0;  // good-loop count > cap

  long long f_bound_violations = 0;  // F(y) > F_l occurrences
  long long b_bound_violations = 0;  // B(y) > B occurrences
  bool injectivity_ok = true;
};

// Walk every multiset permutation once, classifying each and (optionally)
// counting its switchings. This is the shared engine behind class sizes,
// the double-counting identity, the Proposition-2 bound checks, the ratio
// table and the exact exhaustive expectations.
ScanResult exhaustive_scan(const Params& p, const LPolicy& pol, const CostGuard& guard,
                           const ScanOptions& opt = {});

}  // namespace hyperreg

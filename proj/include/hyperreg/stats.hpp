#pragma once

#include <vector>

#include "hyperreg/enumeration.hpp"
#include "hyperreg/scan.hpp"

namespace hyperreg {

// E I_i = C(k,2) (n)_{k-1} (d)_2 d^{k-2} / (nd)_k, the exact probability that
// a given block is a loop with exactly one repeated vertex.
BigRat exact_loop_indicator(const Params& p);

// Exact probability that two given blocks are identical as multisets
// (composition sum over partitions of k with at most k nonzero parts).
BigRat exact_pair_collision(const Params& p);

struct ExactExpectations {
  BigRat e_loop_indicator;
  BigRat e_lambda;     // m * e_loop_indicator (linearity, exact)
  BigRat pair_collision;
  BigRat asymptote;    // (k-1)(d-1)/2
};
ExactExpectations exact_expectations(const Params& p);

// Monte-Carlo classification summary over N independent permutation draws.
// lambda counts good-loop blocks (the paper's sum of loop indicators);
// multi_edge_pair_rate is the per-pair coincidence frequency, comparable to
// exact_pair_collision; the bad-loop rates are per-permutation occurrence
// probabilities whose scale is O(d/n).
struct McSummary {
  long long n_samples = 0;
  long long cap = 0;
  double fraction_in_e = 0, fraction_in_e_se = 0;
  double lambda_mean = 0, lambda_se = 0, lambda_variance = 0;
  double bad_loop_rate_mult3 = 0, bad_loop_rate_mult3_se = 0;
  double bad_loop_rate_double2 = 0, bad_loop_rate_double2_se = 0;
  double multi_edge_pair_rate = 0, multi_edge_pair_rate_se = 0;
  double tail_exceed_rate = 0, tail_exceed_rate_se = 0;
};

// Each sample uses its own child stream of `seed`, so the result is
// byte-identical for any job count.
McSummary mc_summary(const Params& p, long long n_samples, const LPolicy& pol,
                     uint64_t seed, int jobs = 1);

// Same tallies over all of P, as exact rationals.
struct ExhaustiveSummary {
  BigInt p_size;
  long long cap = 0;
  BigRat fraction_in_e;
  BigRat lambda_mean;
  BigRat multi_edge_pair_rate;
  BigRat bad_loop_rate_mult3;
  BigRat bad_loop_rate_double2;
  BigRat tail_exceed_rate;
};
ExhaustiveSummary exhaustive_summary(const Params& p, const LPolicy& pol,
                                     const CostGuard& guard);

struct ChiSquareResult {
  long long classes = 0;
  long long n = 0;
  std::vector<long long> observed;
  double statistic = 0;
  long long df = 0;
  double p_value = 1;
};

// Pearson goodness-of-fit against the uniform distribution over the classes.
ChiSquareResult chi_square_from_counts(const std::vector<long long>& observed);

// Classes must be canonical multigraphs; a sample outside the class list
// signals a generator bug and throws.
ChiSquareResult chi_square_uniformity(const std::vector<Multigraph>& samples,
                                      const std::vector<Multigraph>& classes);

// Exhaustive per-level ratio table with Proposition-2-style sandwich bounds.
std::vector<LevelRatioRow> ratio_table(const Params& p, const LPolicy& pol,
                                       const CostGuard& guard);

}  // namespace hyperreg

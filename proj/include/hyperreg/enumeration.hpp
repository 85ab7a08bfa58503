#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hyperreg/multigraph.hpp"

namespace hyperreg {

using MultigraphSink = std::function<void(const Multigraph&)>;

// Exact |H^(k)(n,d)| by lexicographic backtracking over distinct k-subsets
// with per-vertex remaining-degree pruning. Without a sink, subtree counts
// are memoized on the remaining-degree state; with a sink, every hypergraph
// is visited and streamed in lexicographic order.
BigInt brute_force_count(const Params& p, const CostGuard& guard,
                         const MultigraphSink& sink = nullptr);

struct CountReport {
  Params params;
  std::optional<BigInt> exact_count;
  BigRat formula_leading;        // (nd)! / ((nd/k)! (k!)^{nd/k} (d!)^n)
  BigFloat correction;           // exp(-(k-1)(d-1)/2)
  BigFloat estimate;             // leading * correction
  std::optional<BigFloat> ratio; // exact / estimate
  double error_scale = 0.0;      // sqrt(d/n) + d^2/n, reported only
  unsigned digits = 0;
};

// Enumeration-formula evaluation; exact-rational leading term, correction at
// `digits` decimal digits of working precision.
CountReport formula_estimate(const Params& p, unsigned digits = 50);

struct ClassSizes {
  Params params;
  long long cap = 0;
  BigInt p_size;               // |P|, also verified against (nd)!/(d!)^n
  BigInt e_size;               // |E|
  std::vector<BigInt> levels;  // |E_l|, l = 0..cap
};

// Exact class sizes by iterating every multiset permutation.
ClassSizes exhaustive_class_sizes(const Params& p, const LPolicy& pol,
                                  const CostGuard& guard);

struct LevelRatioRow {
  int level = 0;            // l >= 1
  BigInt size_prev, size;   // |E_{l-1}|, |E_l|
  std::optional<BigRat> ratio;  // |E_l|/|E_{l-1}|
  BigRat reference;         // (k-1)(d-1)/(2l)
  std::optional<BigRat> lower, upper;  // min B/max F and max B/min F sandwich
};

struct CompareReport {
  CountReport count;
  BigInt p_size;                      // (nd)!/(d!)^n
  std::optional<BigInt> e0_size;      // via exact_count * m! (k!)^m
  std::optional<BigRat> p_over_e0;
  double half_kd = 0.0;               // (k-1)(d-1)/2
  std::optional<double> log_p_over_e0;
  std::vector<LevelRatioRow> level_ratios;  // filled when a full scan fits the guard
};

// Join the backtracking oracle with the formula; adds |P|/|E_0| against
// exp((k-1)(d-1)/2) and, when the permutation scan fits the cost guard,
// per-level ratios against (k-1)(d-1)/(2l).
CompareReport compare(const Params& p, const LPolicy& pol, const CostGuard& guard,
                      unsigned digits = 50);

struct ScanResult;  // scan.hpp
std::vector<LevelRatioRow> level_ratio_rows(const ScanResult& scan);

// Number of permutations representing each simple hypergraph: m! (k!)^m.
BigInt perms_per_simple_graph(const Params& p);

// |P| = (nd)!/(d!)^n.
BigInt permutation_count(const Params& p);

}  // namespace hyperreg

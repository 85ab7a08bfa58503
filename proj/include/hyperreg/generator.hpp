#pragma once

#include <vector>

#include "hyperreg/switching.hpp"

namespace hyperreg {

enum class Delta1Source { Formula, ExhaustiveOracle, Override };
enum class GenMode { Exact, Approximate };

struct GenConfig {
  LPolicy l_policy;
  Delta1Source delta1_source = Delta1Source::Formula;
  BigRat delta1_override;  // used when delta1_source == Override
  GenMode mode = GenMode::Exact;
  long long max_attempts = 1'000'000;
  CostGuard guard;  // for the exhaustive delta1 oracle
};

struct GenTrace {
  long long attempts = 0;                // sampling attempts, including the last
  std::vector<int> initial_lambda;       // per attempt; -1 when the draw was not in E
  long long switch_steps = 0;            // accepted steps of the successful attempt
  long long not_in_e = 0;                // restart causes
  long long f_rejections = 0;
  long long b_rejections = 0;
  BigRat delta1_used;
  GenMode mode = GenMode::Exact;
};

struct GenResult {
  Multigraph graph;  // simple and d-regular
  GenTrace trace;
};

// Resolve the configured delta1 source to a concrete value (0 for d = 1,
// where no switching step ever runs). The exhaustive oracle is a full scan;
// callers drawing many samples should resolve once and switch the config to
// Override.
BigRat resolve_delta1(const Params& p, const GenConfig& cfg, long long cap);

// Exactly uniform over H^(k)(n,d): sample y uniform on P, restart unless y is
// in E, then remove the lambda(y) loops by forward switchings. Each step draws
// a raw tuple from the F_l-sized space (restart on an invalid decode, which
// realizes the F(y)/F_l acceptance) and then restarts with probability
// 1 - (1-delta1) B / B(z). All acceptance draws are exact-rational Bernoulli
// trials. Requires delta1 < 1 in exact mode.
GenResult generate(const Params& p, const GenConfig& cfg, Rng& rng);

// Same loop without the f-/b-rejections: a forward op is drawn uniformly
// among the valid ones (equivalently, invalid raw tuples are re-drawn), and
// no backward-count rejection is applied. Close to uniform, not exactly so.
GenResult generate_approx(const Params& p, const GenConfig& cfg, Rng& rng);

struct ExhaustiveDelta1 {
  BigRat value;
  bool degenerate = false;  // no reachable state had a defined B(z)
  long long min_b = -1;     // smallest B(z) seen
};

// Tight delta1 for small instances: 1 - min{B(z)/B} over all z in E_l,
// 0 <= l <= L-1. Scans every permutation; the cost guard bounds |P|.
ExhaustiveDelta1 delta1_exhaustive(const Params& p, const LPolicy& pol,
                                   const CostGuard& guard);

}  // namespace hyperreg

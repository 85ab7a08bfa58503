#include "hyperreg/generator.hpp"

#include "hyperreg/enumeration.hpp"

namespace hyperreg {

BigRat resolve_delta1(const Params& p, const GenConfig& cfg, long long cap) {
  // With d = 1 no permutation has a loop, so no switching step ever runs and
  // the b-rejection probability is never evaluated; delta1 is vacuous.
  if (p.d == 1) return BigRat(0);
  switch (cfg.delta1_source) {
    case Delta1Source::Formula:
      return delta1_formula(p, cap).value;
    case Delta1Source::ExhaustiveOracle:
      return delta1_exhaustive(p, cfg.l_policy, cfg.guard).value;
    case Delta1Source::Override:
      return cfg.delta1_override;
  }
  throw DomainError("unknown delta1 source");
}

namespace {

GenResult run_generator(const Params& p, const GenConfig& cfg, Rng& rng, bool exact) {
  const long long cap = cfg.l_policy.loop_cap(p);
  GenTrace trace;
  trace.mode = exact ? GenMode::Exact : GenMode::Approximate;
  trace.delta1_used = exact ? resolve_delta1(p, cfg, cap) : BigRat(0);
  if (exact && trace.delta1_used >= 1)
    throw DomainError("exact mode needs delta1 < 1; use the exhaustive oracle or a larger instance");

  const BigRat b_upper = backward_upper_bound(p);
  const BigRat survival = 1 - trace.delta1_used;  // (1 - delta1)
  const int k = p.k;

  PermSeq y;
  PermClassifier classifier(p);
  SwitchView view(p);

  for (long long attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    trace.attempts = attempt;
    sample_permutation_into(p, rng, y);
    const Classification& c = classifier.classify(y, cap);
    if (!c.level) {
      trace.initial_lambda.push_back(-1);
      ++trace.not_in_e;
      continue;
    }
    trace.initial_lambda.push_back(*c.level);
    trace.switch_steps = 0;

    int level = *c.level;
    bool restart = false;
    while (level > 0 && !restart) {
      view.rebuild(y);
      ForwardOp op;
      if (exact) {
        RawForward raw;
        raw.loop_index = static_cast<long long>(rng.below(level));
        raw.block1 = static_cast<long long>(rng.below(p.m));
        raw.block2 = static_cast<long long>(rng.below(p.m));
        raw.pos1 = static_cast<int>(rng.below(k));
        raw.pos2 = static_cast<int>(rng.below(k));
        const auto decoded = view.decode_raw_forward(raw);
        if (!decoded) {
          ++trace.f_rejections;  // acceptance F(y)/F_l, realized implicitly
          restart = true;
          break;
        }
        op = *decoded;
      } else {
        // Re-draw raw tuples until one decodes; conditional on validity the
        // op is uniform among the valid ones. After too many misses, settle
        // it by full enumeration (detects the F(y) = 0 dead end).
        bool found = false;
        for (int tries = 0; tries < 4096 && !found; ++tries) {
          RawForward raw;
          raw.loop_index = static_cast<long long>(rng.below(level));
          raw.block1 = static_cast<long long>(rng.below(p.m));
          raw.block2 = static_cast<long long>(rng.below(p.m));
          raw.pos1 = static_cast<int>(rng.below(k));
          raw.pos2 = static_cast<int>(rng.below(k));
          if (auto decoded = view.decode_raw_forward(raw)) {
            op = *decoded;
            found = true;
          }
        }
        if (!found) {
          const auto ops = view.enumerate_forward();
          if (ops.empty()) {
            ++trace.f_rejections;  // dead end, restart the attempt
            restart = true;
            break;
          }
          op = ops[rng.below(ops.size())];
        }
      }

      PermSeq z = apply_forward(p, y, op);
      if (exact) {
        view.rebuild(z);
        const long long b_z = view.count_backward(cap);
        // z was reached by a forward op, so its inverse guarantees B(z) >= 1.
        const BigRat accept = survival * b_upper / b_z;
        if (accept > 1)
          throw DomainError(
              "encountered B(z) < (1-delta1) B: the configured delta1 is not a valid lower-bound deficiency");
        if (!rng.bernoulli(accept)) {
          ++trace.b_rejections;
          restart = true;
          break;
        }
      }
      y = std::move(z);
      --level;
      ++trace.switch_steps;
    }
    if (restart) continue;

    GenResult out{build_multigraph(p, y), std::move(trace)};
    if (!out.graph.is_simple() || !out.graph.is_regular(p.d))
      throw DomainError("generator produced a non-simple or non-regular output");
    return out;
  }
  throw BudgetError(
      "restart budget exhausted (E_0 may be empty or the instance infeasible)");
}

}  // namespace

GenResult generate(const Params& p, const GenConfig& cfg, Rng& rng) {
  return run_generator(p, cfg, rng, /*exact=*/true);
}

GenResult generate_approx(const Params& p, const GenConfig& cfg, Rng& rng) {
  return run_generator(p, cfg, rng, /*exact=*/false);
}

ExhaustiveDelta1 delta1_exhaustive(const Params& p, const LPolicy& pol,
                                   const CostGuard& guard) {
  const BigInt expected = permutation_count(p);
  if (expected > guard.max_perms)
    throw CostGuardError("|P| exceeds the permutation-scan cost guard");
  const long long cap = pol.loop_cap(p);

  PermClassifier classifier(p);
  SwitchView view(p);
  long long min_b = -1;
  PermSeq y = canonical_perm(p);
  do {
    const Classification& c = classifier.classify(y, cap);
    if (!c.level || *c.level + 1 > cap) continue;
    view.rebuild(y);
    const long long b = view.count_backward(cap);
    if (min_b < 0 || b < min_b) min_b = b;
  } while (next_perm(y));

  ExhaustiveDelta1 out;
  out.min_b = min_b;
  if (min_b < 0) {
    // No state with a defined B(z) exists (e.g. all relevant E_l empty);
    // report 0 and flag it so callers can warn.
    out.value = BigRat(0);
    out.degenerate = true;
    return out;
  }
  out.value = 1 - BigRat(min_b) / backward_upper_bound(p);
  return out;
}

}  // namespace hyperreg

#include "hyperreg/verify.hpp"

namespace hyperreg {

IdentityReport verify_identity(const Params& p, const LPolicy& pol,
                               const CostGuard& guard) {
  ScanOptions opt;
  opt.switch_counts = true;
  const ScanResult scan = exhaustive_scan(p, pol, guard, opt);

  IdentityReport rep;
  rep.params = p;
  rep.cap = scan.cap;
  for (int l = 1; l <= scan.cap; ++l) {
    IdentityRow row;
    row.level = l;
    row.sum_f = scan.levels[l].sum_f;
    row.sum_b = scan.levels[l - 1].sum_b;
    row.equal = row.sum_f == row.sum_b;
    rep.all_equal = rep.all_equal && row.equal;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

BoundsReport verify_bounds(const Params& p, const LPolicy& pol, const CostGuard& guard) {
  ScanOptions opt;
  opt.switch_counts = true;
  opt.check_injectivity = true;
  const ScanResult scan = exhaustive_scan(p, pol, guard, opt);

  BoundsReport rep;
  rep.params = p;
  rep.cap = scan.cap;
  rep.perms_scanned = scan.p_size;
  rep.f_violations = scan.f_bound_violations;
  rep.b_violations = scan.b_bound_violations;
  rep.injectivity_ok = scan.injectivity_ok;
  return rep;
}

UniformityReport verify_uniformity(const Params& p, const LPolicy& pol, uint64_t seed,
                                   const CostGuard& guard, long long min_samples,
                                   long long per_class, double threshold) {
  UniformityReport rep;
  rep.params = p;
  rep.seed = seed;
  rep.threshold = threshold;

  std::vector<Multigraph> classes;
  brute_force_count(p, guard, [&](const Multigraph& g) { classes.push_back(g); });
  rep.n_classes = static_cast<long long>(classes.size());
  if (classes.empty()) throw DomainError("no simple hypergraph exists at these parameters");

  const ExhaustiveDelta1 d1 = delta1_exhaustive(p, pol, guard);
  rep.delta1 = d1.value;
  rep.delta1_degenerate = d1.degenerate;

  GenConfig cfg;
  cfg.l_policy = pol;
  cfg.delta1_source = Delta1Source::Override;
  cfg.delta1_override = d1.value;
  cfg.mode = GenMode::Exact;
  cfg.guard = guard;

  rep.n_samples = std::max(min_samples, per_class * rep.n_classes);
  std::vector<Multigraph> samples;
  samples.reserve(rep.n_samples);
  for (long long i = 0; i < rep.n_samples; ++i) {
    Rng rng(Rng::child_seed(seed, static_cast<uint64_t>(i)));
    samples.push_back(generate(p, cfg, rng).graph);
  }
  rep.chi = chi_square_uniformity(samples, classes);
  rep.pass = rep.chi.p_value > threshold;
  return rep;
}

}  // namespace hyperreg

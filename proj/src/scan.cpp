#include "hyperreg/scan.hpp"

#include <algorithm>

#include "hyperreg/enumeration.hpp"

namespace hyperreg {

ScanResult exhaustive_scan(const Params& p, const LPolicy& pol, const CostGuard& guard,
                           const ScanOptions& opt) {
  const BigInt expected = permutation_count(p);
  if (expected > guard.max_perms)
    throw CostGuardError("|P| exceeds the permutation-scan cost guard");

  ScanResult r;
  r.params = p;
  r.cap = pol.loop_cap(p);
  r.levels.resize(r.cap + 1);

  PermClassifier classifier(p);
  SwitchView view(p);
  std::vector<PermSeq> results;  // forward-op results, injectivity check

  PermSeq y = canonical_perm(p);
  const BigRat b_upper = backward_upper_bound(p);
  do {
    ++r.p_size;
    const Classification& c = classifier.classify(y, r.cap);
    r.total_good_loops += c.good_loops;
    r.total_loop_blocks += c.loop_blocks;
    r.equal_block_pairs += classifier.equal_block_pairs();
    if (c.has_multi_edge) ++r.perms_with_multi_edge;
    bool mult3 = false, double2 = false;
    for (EdgeKind kk : classifier.kinds()) {
      mult3 = mult3 || kk == EdgeKind::BadLoopMult3;
      double2 = double2 || kk == EdgeKind::BadLoopTwoRepeats;
    }
    if (mult3) ++r.perms_with_mult3;
    if (double2) ++r.perms_with_double2;
    if (c.good_loops > r.cap) ++r.perms_tail_exceed;
    if (!c.level) continue;

    const int l = *c.level;
    ++r.e_size;
    auto& agg = r.levels[l];
    ++agg.size;
    if (!opt.switch_counts) continue;

    view.rebuild(y);
    if (l >= 1) {
      long long f;
      if (opt.check_injectivity) {
        results.clear();
        for (const ForwardOp& op : view.enumerate_forward())
          results.push_back(apply_forward(p, y, op));
        f = static_cast<long long>(results.size());
        std::sort(results.begin(), results.end());
        if (std::adjacent_find(results.begin(), results.end()) != results.end())
          r.injectivity_ok = false;
      } else {
        f = view.count_forward();
      }
      agg.sum_f += f;
      agg.min_f = agg.min_f < 0 ? f : std::min(agg.min_f, f);
      agg.max_f = std::max(agg.max_f, f);
      if (BigInt(f) > forward_upper_bound(p, l)) ++r.f_bound_violations;
    }
    if (l + 1 <= r.cap) {
      const long long b = view.count_backward(r.cap);
      agg.sum_b += b;
      agg.min_b = agg.min_b < 0 ? b : std::min(agg.min_b, b);
      agg.max_b = std::max(agg.max_b, b);
      if (BigRat(b) > b_upper) ++r.b_bound_violations;
    }
  } while (next_perm(y));

  if (r.p_size != expected)
    throw DomainError("permutation iteration count disagrees with (nd)!/(d!)^n");
  return r;
}

}  // namespace hyperreg

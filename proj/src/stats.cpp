#include "hyperreg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>

namespace hyperreg {

BigRat exact_loop_indicator(const Params& p) {
  const BigInt numer = binomial(p.k, 2) * falling_factorial(BigInt(p.n), p.k - 1) *
                       falling_factorial(BigInt(p.d), 2) * int_pow(BigInt(p.d), p.k - 2);
  return BigRat(numer) / BigRat(falling_factorial(BigInt(p.nd()), p.k));
}

namespace {

void walk_partitions(long long remaining, long long max_part, long long max_len,
                     std::vector<long long>& parts,
                     const std::function<void(const std::vector<long long>&)>& fn) {
  if (remaining == 0) {
    fn(parts);
    return;
  }
  if (max_len == 0) return;
  for (long long q = std::min(remaining, max_part); q >= 1; --q) {
    parts.push_back(q);
    walk_partitions(remaining - q, q, max_len - 1, parts, fn);
    parts.pop_back();
  }
}

}  // namespace

BigRat exact_pair_collision(const Params& p) {
  // Two blocks coincide iff some composition (k_1,...,k_n) of k describes the
  // shared multiset, with d - 2 k_i copies of label i left for the rest.
  // Compositions are grouped by the partition of k they induce; only the
  // partition enters the probability, the label choice is a falling factorial.
  BigRat total = 0;
  const long long max_part = p.d / 2;
  std::vector<long long> parts;
  walk_partitions(p.k, std::min<long long>(max_part, p.k), std::min(p.k, p.n), parts,
                  [&](const std::vector<long long>& q) {
                    const long long used = static_cast<long long>(q.size());
                    BigInt assigns = falling_factorial(BigInt(p.n), used);
                    size_t i = 0;
                    while (i < q.size()) {
                      size_t j = i + 1;
                      while (j < q.size() && q[j] == q[i]) ++j;
                      assigns /= factorial(j - i);
                      i = j;
                    }
                    const BigInt mk = multinomial(q);
                    BigRat term =
                        BigRat(int_pow(factorial(p.d), used) *
                               factorial(p.nd() - 2 * p.k)) /
                        BigRat(factorial(p.nd()));
                    for (long long part : q) term /= BigRat(factorial(p.d - 2 * part));
                    total += BigRat(assigns * mk * mk) * term;
                  });
  return total;
}

ExactExpectations exact_expectations(const Params& p) {
  ExactExpectations e;
  e.e_loop_indicator = exact_loop_indicator(p);
  e.e_lambda = BigRat(p.m) * e.e_loop_indicator;
  e.pair_collision = exact_pair_collision(p);
  e.asymptote = BigRat(static_cast<long long>(p.k - 1) * (p.d - 1), 2);
  return e;
}

namespace {

struct Tally {
  long long in_e = 0;
  long long good_sum = 0;
  long long good_sq_sum = 0;
  long long mult3 = 0;
  long long double2 = 0;
  long long tail = 0;
  long long eq_pairs_sum = 0;
  long long eq_pairs_sq_sum = 0;

  void merge(const Tally& o) {
    in_e += o.in_e;
    good_sum += o.good_sum;
    good_sq_sum += o.good_sq_sum;
    mult3 += o.mult3;
    double2 += o.double2;
    tail += o.tail;
    eq_pairs_sum += o.eq_pairs_sum;
    eq_pairs_sq_sum += o.eq_pairs_sq_sum;
  }
};

Tally tally_range(const Params& p, long long cap, uint64_t seed, long long begin,
                  long long end) {
  Tally t;
  PermClassifier classifier(p);
  PermSeq y = canonical_perm(p);
  for (long long i = begin; i < end; ++i) {
    Rng rng(Rng::child_seed(seed, static_cast<uint64_t>(i)));
    sample_permutation_into(p, rng, y);
    const Classification& c = classifier.classify(y, cap);
    if (c.level) ++t.in_e;
    t.good_sum += c.good_loops;
    t.good_sq_sum += static_cast<long long>(c.good_loops) * c.good_loops;
    bool m3 = false, d2 = false;
    for (EdgeKind kk : classifier.kinds()) {
      m3 = m3 || kk == EdgeKind::BadLoopMult3;
      d2 = d2 || kk == EdgeKind::BadLoopTwoRepeats;
    }
    if (m3) ++t.mult3;
    if (d2) ++t.double2;
    if (c.good_loops > cap) ++t.tail;
    const long long eq = classifier.equal_block_pairs();
    t.eq_pairs_sum += eq;
    t.eq_pairs_sq_sum += eq * eq;
  }
  return t;
}

double rate_se(double rate, long long n) {
  return n > 0 ? std::sqrt(rate * (1.0 - rate) / static_cast<double>(n)) : 0.0;
}

}  // namespace

McSummary mc_summary(const Params& p, long long n_samples, const LPolicy& pol,
                     uint64_t seed, int jobs) {
  if (n_samples < 1) throw DomainError("mc_summary needs at least one sample");
  const long long cap = pol.loop_cap(p);
  jobs = std::max(1, jobs);

  Tally t;
  if (jobs == 1) {
    t = tally_range(p, cap, seed, 0, n_samples);
  } else {
    std::vector<Tally> parts(jobs);
    std::vector<std::thread> workers;
    const long long chunk = (n_samples + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const long long b = j * chunk;
      const long long e = std::min(n_samples, b + chunk);
      if (b >= e) break;
      workers.emplace_back([&, j, b, e] { parts[j] = tally_range(p, cap, seed, b, e); });
    }
    for (auto& w : workers) w.join();
    for (const auto& part : parts) t.merge(part);
  }

  const auto N = static_cast<double>(n_samples);
  McSummary s;
  s.n_samples = n_samples;
  s.cap = cap;
  s.fraction_in_e = t.in_e / N;
  s.fraction_in_e_se = rate_se(s.fraction_in_e, n_samples);
  s.lambda_mean = t.good_sum / N;
  if (n_samples > 1) {
    s.lambda_variance =
        (t.good_sq_sum - t.good_sum * s.lambda_mean) / static_cast<double>(n_samples - 1);
    s.lambda_variance = std::max(0.0, s.lambda_variance);
  }
  s.lambda_se = std::sqrt(s.lambda_variance / N);
  s.bad_loop_rate_mult3 = t.mult3 / N;
  s.bad_loop_rate_mult3_se = rate_se(s.bad_loop_rate_mult3, n_samples);
  s.bad_loop_rate_double2 = t.double2 / N;
  s.bad_loop_rate_double2_se = rate_se(s.bad_loop_rate_double2, n_samples);
  const double pairs = p.m >= 2 ? static_cast<double>(p.m) * (p.m - 1) / 2.0 : 0.0;
  if (pairs > 0) {
    s.multi_edge_pair_rate = t.eq_pairs_sum / (N * pairs);
    const double mean = t.eq_pairs_sum / N;
    if (n_samples > 1) {
      const double var =
          std::max(0.0, (t.eq_pairs_sq_sum - mean * t.eq_pairs_sum) / (N - 1.0));
      s.multi_edge_pair_rate_se = std::sqrt(var / N) / pairs;
    }
  }
  s.tail_exceed_rate = t.tail / N;
  s.tail_exceed_rate_se = rate_se(s.tail_exceed_rate, n_samples);
  return s;
}

ExhaustiveSummary exhaustive_summary(const Params& p, const LPolicy& pol,
                                     const CostGuard& guard) {
  const ScanResult scan = exhaustive_scan(p, pol, guard, {});
  ExhaustiveSummary s;
  s.p_size = scan.p_size;
  s.cap = scan.cap;
  const BigRat total(scan.p_size);
  s.fraction_in_e = BigRat(scan.e_size) / total;
  s.lambda_mean = BigRat(scan.total_good_loops) / total;
  const long long pairs = p.m >= 2 ? p.m * (p.m - 1) / 2 : 0;
  s.multi_edge_pair_rate =
      pairs > 0 ? BigRat(scan.equal_block_pairs) / (total * pairs) : BigRat(0);
  s.bad_loop_rate_mult3 = BigRat(scan.perms_with_mult3) / total;
  s.bad_loop_rate_double2 = BigRat(scan.perms_with_double2) / total;
  s.tail_exceed_rate = BigRat(scan.perms_tail_exceed) / total;
  return s;
}

ChiSquareResult chi_square_from_counts(const std::vector<long long>& observed) {
  ChiSquareResult r;
  r.classes = static_cast<long long>(observed.size());
  if (r.classes < 2) throw DomainError("chi-square needs at least two classes");
  r.observed = observed;
  for (long long c : observed) r.n += c;
  if (r.n <= 0) throw DomainError("chi-square needs at least one observation");
  const double expected = static_cast<double>(r.n) / static_cast<double>(r.classes);
  for (long long c : observed) {
    const double diff = static_cast<double>(c) - expected;
    r.statistic += diff * diff / expected;
  }
  r.df = r.classes - 1;
  r.p_value = boost::math::gamma_q(static_cast<double>(r.df) / 2.0, r.statistic / 2.0);
  return r;
}

ChiSquareResult chi_square_uniformity(const std::vector<Multigraph>& samples,
                                      const std::vector<Multigraph>& classes) {
  std::map<Multigraph, size_t> index;
  for (size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);
  std::vector<long long> observed(classes.size(), 0);
  for (const Multigraph& s : samples) {
    auto it = index.find(s);
    if (it == index.end())
      throw DomainError("sample is not among the enumerated classes (generator bug)");
    ++observed[it->second];
  }
  return chi_square_from_counts(observed);
}

std::vector<LevelRatioRow> ratio_table(const Params& p, const LPolicy& pol,
                                       const CostGuard& guard) {
  ScanOptions opt;
  opt.switch_counts = true;
  return level_ratio_rows(exhaustive_scan(p, pol, guard, opt));
}

}  // namespace hyperreg

#include "hyperreg/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "hyperreg/scan.hpp"

namespace hyperreg {

BigInt permutation_count(const Params& p) {
  return factorial(p.nd()) / int_pow(factorial(p.d), p.n);
}

BigInt perms_per_simple_graph(const Params& p) {
  return factorial(p.m) * int_pow(factorial(p.k), p.m);
}

namespace {

// Lexicographic backtracking over distinct k-subsets. The next edge always
// covers the least vertex with remaining degree, and edges chosen for the
// same least vertex are generated in strictly increasing lexicographic
// order, so every hypergraph is produced exactly once. Edges from different
// phases cannot coincide: an earlier phase's edge contains a vertex that is
// exhausted by the time a later phase runs.
class EdgeSetSearch {
 public:
  EdgeSetSearch(const Params& p, const MultigraphSink& sink) : p_(p), sink_(sink) {
    rem_.assign(p.n + 1, p.d);
  }

  BigInt run() { return at_phase_boundary(); }

 private:
  using Edge = EdgeVec;

  BigInt at_phase_boundary() {
    int least = 0;
    for (int v = 1; v <= p_.n; ++v) {
      if (rem_[v] > 0) {
        least = v;
        break;
      }
    }
    if (least == 0) {
      if (sink_) {
        Multigraph g{p_.n, p_.k, edges_};
        g.canonicalize();
        sink_(g);
      }
      return 1;
    }
    // Subtree counts depend on the remaining degrees of unfinished vertices
    // only through their multiset (relabeling symmetry), so the memo key is
    // the sorted remainder vector. Streaming mode must visit every leaf.
    std::string key;
    if (!sink_) {
      key.reserve(p_.n - least + 1);
      for (int v = least; v <= p_.n; ++v)
        if (rem_[v] > 0) key.push_back(static_cast<char>(rem_[v]));
      std::sort(key.begin(), key.end());
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const BigInt total = extend_phase(least, nullptr);
    if (!sink_) memo_.emplace(std::move(key), total);
    return total;
  }

  BigInt extend_phase(int u, const Edge* floor_edge) {
    std::vector<Vertex> avail;
    for (int v = u + 1; v <= p_.n; ++v)
      if (rem_[v] > 0) avail.push_back(v);
    const int need = p_.k - 1;
    if (static_cast<int>(avail.size()) < need) return 0;

    BigInt total = 0;
    std::vector<int> idx(need);
    for (int i = 0; i < need; ++i) idx[i] = i;
    Edge e(p_.k);
    for (;;) {
      e[0] = u;
      for (int i = 0; i < need; ++i) e[i + 1] = avail[idx[i]];
      if (!floor_edge || e > *floor_edge) {
        for (Vertex v : e) --rem_[v];
        edges_.push_back(e);
        total += rem_[u] > 0 ? extend_phase(u, &edges_.back()) : at_phase_boundary();
        edges_.pop_back();
        for (Vertex v : e) ++rem_[v];
      }
      // next combination of avail indices
      int i = need - 1;
      while (i >= 0 && idx[i] == static_cast<int>(avail.size()) - need + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    return total;
  }

  Params p_;
  const MultigraphSink& sink_;
  std::vector<int> rem_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, BigInt> memo_;
};

}  // namespace

BigInt brute_force_count(const Params& p, const CostGuard& guard,
                         const MultigraphSink& sink) {
  if (binomial(p.n, p.k) > guard.max_edge_choices)
    throw CostGuardError("C(n,k) exceeds the edge-set oracle cost guard");
  EdgeSetSearch search(p, sink);
  return search.run();
}

CountReport formula_estimate(const Params& p, unsigned digits) {
  CountReport r;
  r.params = p;
  r.digits = digits;
  r.formula_leading = BigRat(factorial(p.nd())) /
                      BigRat(factorial(p.m) * int_pow(factorial(p.k), p.m) *
                             int_pow(factorial(p.d), p.n));
  const BigRat exponent = BigRat(static_cast<long long>(p.k - 1) * (p.d - 1), 2);
  r.correction = exp(-to_big_float(exponent, digits));
  r.estimate = to_big_float(r.formula_leading, digits) * r.correction;
  r.error_scale = std::sqrt(static_cast<double>(p.d) / p.n) +
                  static_cast<double>(p.d) * p.d / p.n;
  return r;
}

ClassSizes exhaustive_class_sizes(const Params& p, const LPolicy& pol,
                                  const CostGuard& guard) {
  const ScanResult scan = exhaustive_scan(p, pol, guard, {});
  ClassSizes out;
  out.params = p;
  out.cap = scan.cap;
  out.p_size = scan.p_size;
  out.e_size = scan.e_size;
  out.levels.reserve(scan.levels.size());
  for (const auto& agg : scan.levels) out.levels.push_back(agg.size);
  return out;
}

std::vector<LevelRatioRow> level_ratio_rows(const ScanResult& scan) {
  std::vector<LevelRatioRow> rows;
  const Params& p = scan.params;
  for (int l = 1; l <= scan.cap; ++l) {
    const auto& prev = scan.levels[l - 1];
    const auto& cur = scan.levels[l];
    if (cur.size == 0) continue;  // no populated level, nothing to ratio
    LevelRatioRow row;
    row.level = l;
    row.size_prev = prev.size;
    row.size = cur.size;
    if (prev.size > 0) row.ratio = BigRat(cur.size) / BigRat(prev.size);
    row.reference = BigRat(static_cast<long long>(p.k - 1) * (p.d - 1), 2 * l);
    // |E_l|/|E_{l-1}| = avg B over E_{l-1} / avg F over E_l, so the exhaustive
    // extremes give hard sandwich bounds.
    if (prev.min_b >= 0 && cur.max_f > 0) row.lower = BigRat(prev.min_b, cur.max_f);
    if (prev.max_b >= 0 && cur.min_f > 0) row.upper = BigRat(prev.max_b, cur.min_f);
    rows.push_back(std::move(row));
  }
  return rows;
}

CompareReport compare(const Params& p, const LPolicy& pol, const CostGuard& guard,
                      unsigned digits) {
  CompareReport rep;
  rep.count = formula_estimate(p, digits);
  rep.count.exact_count = brute_force_count(p, guard);
  rep.count.ratio = to_big_float(*rep.count.exact_count, digits) / rep.count.estimate;

  rep.p_size = permutation_count(p);
  rep.e0_size = *rep.count.exact_count * perms_per_simple_graph(p);
  rep.half_kd = static_cast<double>(p.k - 1) * (p.d - 1) / 2.0;
  if (*rep.e0_size > 0) {
    rep.p_over_e0 = BigRat(rep.p_size) / BigRat(*rep.e0_size);
    rep.log_p_over_e0 =
        static_cast<double>(log(to_big_float(*rep.p_over_e0, rep.count.digits)));
  }

  if (rep.p_size <= guard.max_perms) {
    ScanOptions opt;
    opt.switch_counts = true;
    rep.level_ratios = level_ratio_rows(exhaustive_scan(p, pol, guard, opt));
  }
  return rep;
}

}  // namespace hyperreg

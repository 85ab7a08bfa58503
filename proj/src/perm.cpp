#include "hyperreg/perm.hpp"

#include <algorithm>
#include <numeric>

namespace hyperreg {

PermSeq canonical_perm(const Params& p) {
  PermSeq y;
  y.reserve(p.nd());
  for (int v = 1; v <= p.n; ++v)
    for (int i = 0; i < p.d; ++i) y.push_back(v);
  return y;
}

bool is_valid_perm(const Params& p, const PermSeq& y) {
  if (static_cast<long long>(y.size()) != p.nd()) return false;
  std::vector<int> count(p.n + 1, 0);
  for (Vertex v : y) {
    if (v < 1 || v > p.n) return false;
    ++count[v];
  }
  for (int v = 1; v <= p.n; ++v)
    if (count[v] != p.d) return false;
  return true;
}

void check_perm(const Params& p, const PermSeq& y) {
  if (!is_valid_perm(p, y))
    throw DomainError("permutation is not a rearrangement of the degree multiset");
}

void sample_permutation_into(const Params& p, Rng& rng, PermSeq& y) {
  if (static_cast<long long>(y.size()) != p.nd()) y = canonical_perm(p);
  // Fisher-Yates on the multiset; the starting order does not matter for
  // uniformity, so the previous contents can be reused as-is.
  for (size_t i = y.size() - 1; i > 0; --i) {
    const size_t j = rng.below(i + 1);
    std::swap(y[i], y[j]);
  }
}

PermSeq sample_permutation(const Params& p, Rng& rng) {
  PermSeq y = canonical_perm(p);
  sample_permutation_into(p, rng, y);
  return y;
}

bool next_perm(PermSeq& y) { return std::next_permutation(y.begin(), y.end()); }

Multigraph build_multigraph(const Params& p, const PermSeq& y) {
  check_perm(p, y);
  Multigraph g;
  g.n = p.n;
  g.k = p.k;
  g.edges.reserve(p.m);
  for (long long b = 0; b < p.m; ++b) {
    EdgeVec e(y.begin() + b * p.k, y.begin() + (b + 1) * p.k);
    std::sort(e.begin(), e.end());
    g.edges.push_back(std::move(e));
  }
  g.canonicalize();
  return g;
}

Classification classify_perm(const Params& p, const PermSeq& y, const LPolicy& pol) {
  check_perm(p, y);
  PermClassifier c(p);
  return c.classify(y, pol.loop_cap(p));
}

PermClassifier::PermClassifier(const Params& p) : p_(p) {
  sorted_.resize(p.m);
  for (auto& e : sorted_) e.resize(p.k);
  kind_.resize(p.m);
  order_.resize(p.m);
}

const Classification& PermClassifier::classify(const PermSeq& y, long long cap) {
  const int k = p_.k;
  last_ = Classification{};
  last_.cap = cap;
  for (long long b = 0; b < p_.m; ++b) {
    auto& e = sorted_[b];
    std::copy(y.begin() + b * k, y.begin() + (b + 1) * k, e.begin());
    std::sort(e.begin(), e.end());
    const EdgeKind kk = classify_edge(e);
    kind_[b] = kk;
    if (is_loop(kk)) ++last_.loop_blocks;
    if (kk == EdgeKind::GoodLoop) ++last_.good_loops;
    if (is_bad_loop(kk)) last_.has_bad_loop = true;
  }
  std::iota(order_.begin(), order_.end(), 0);
  std::sort(order_.begin(), order_.end(),
            [&](int a, int b) { return sorted_[a] < sorted_[b]; });
  equal_pairs_ = 0;
  size_t run = 1;
  for (long long i = 1; i <= p_.m; ++i) {
    if (i < p_.m && sorted_[order_[i]] == sorted_[order_[i - 1]]) {
      ++run;
      continue;
    }
    equal_pairs_ += static_cast<long long>(run) * (run - 1) / 2;
    run = 1;
  }
  last_.has_multi_edge = equal_pairs_ > 0;
  if (!last_.has_multi_edge && !last_.has_bad_loop && last_.loop_blocks <= cap)
    last_.level = last_.loop_blocks;
  return last_;
}

}  // namespace hyperreg

#include "hyperreg/switching.hpp"

#include <algorithm>
#include <cassert>

namespace hyperreg {

BigInt forward_upper_bound(const Params& p, long long l) {
  if (l < 1) throw DomainError("forward bound F_l needs l >= 1");
  return BigInt(p.d) * p.d * p.n * p.n * l;
}

BigRat backward_upper_bound(const Params& p) {
  return BigRat(p.k - 1, 2) * p.n * p.n * p.d * p.d * (p.d - 1);
}

Delta1 delta1_formula(const Params& p, long long cap) {
  if (p.d < 2) throw DomainError("delta1 needs d >= 2 (no backward switchings for d = 1)");
  const BigInt L = cap;
  const BigInt n = p.n, d = p.d, k = p.k, m = p.m;
  const BigInt excluded =
      2 * k * L * d * m + L * n * d * (d - 1) + 2 * k * k * n * d * d * d * d;
  Delta1 out;
  out.value = BigRat(binomial(p.k, 2) * excluded) / backward_upper_bound(p);
  out.valid_regime = out.value < 1;
  return out;
}

SwitchView::SwitchView(const Params& p) : p_(p) {
  sorted_.resize(p.m);
  kind_.resize(p.m);
  loop_vertex_.resize(p.m, 0);
  vertex_propers_.resize(p.n + 1);
  lookup_.resize(p.m);
}

SwitchView::SwitchView(const Params& p, const PermSeq& y) : SwitchView(p) { rebuild(y); }

void SwitchView::rebuild(const PermSeq& y) {
  y_ = &y;
  const int k = p_.k;
  loops_.clear();
  propers_.clear();
  good_loops_ = 0;
  has_bad_loop_ = false;
  has_multi_edge_ = false;
  for (auto& lst : vertex_propers_) lst.clear();

  for (long long b = 0; b < p_.m; ++b) {
    auto& e = sorted_[b];
    e.assign(y.begin() + b * k, y.begin() + (b + 1) * k);
    std::sort(e.begin(), e.end());
    const EdgeKind kk = classify_edge(e);
    kind_[b] = kk;
    if (kk == EdgeKind::Proper) {
      propers_.push_back(b);
      for (Vertex v : e) vertex_propers_[v].push_back(b);
    } else {
      loops_.push_back(b);
      if (kk == EdgeKind::GoodLoop) {
        ++good_loops_;
        for (size_t i = 1; i < e.size(); ++i)
          if (e[i] == e[i - 1]) loop_vertex_[b] = e[i];
      } else {
        has_bad_loop_ = true;
      }
    }
  }

  for (long long b = 0; b < p_.m; ++b) lookup_[b] = b;
  std::sort(lookup_.begin(), lookup_.end(),
            [&](int a, int b) { return sorted_[a] < sorted_[b]; });
  for (long long i = 1; i < p_.m; ++i)
    if (sorted_[lookup_[i]] == sorted_[lookup_[i - 1]]) has_multi_edge_ = true;
}

std::optional<int> SwitchView::level(long long cap) const {
  if (has_bad_loop_ || has_multi_edge_ || loop_count() > cap) return std::nullopt;
  return loop_count();
}

bool SwitchView::collides_outside(const EdgeVec& cand, int r1, int r2, int r3) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), cand,
                             [&](int b, const EdgeVec& e) { return sorted_[b] < e; });
  for (; it != lookup_.end() && sorted_[*it] == cand; ++it)
    if (*it != r1 && *it != r2 && *it != r3) return true;
  return false;
}

bool SwitchView::forward_result_ok(int f, int b1, int b2, Vertex ys, Vertex zs) const {
  const Vertex v = loop_vertex_[f];
  replace_vertex(sorted_[b1], ys, v, e1n_);
  replace_vertex(sorted_[b2], zs, v, e2n_);
  // e3' = f - {v,v} + {y*,z*}
  e3n_.clear();
  for (Vertex x : sorted_[f])
    if (x != v) e3n_.push_back(x);
  e3n_.insert(std::upper_bound(e3n_.begin(), e3n_.end(), ys), ys);
  e3n_.insert(std::upper_bound(e3n_.begin(), e3n_.end(), zs), zs);
  assert(all_distinct(e1n_) && all_distinct(e2n_) && all_distinct(e3n_));

  if (e1n_ == e2n_ || e1n_ == e3n_ || e2n_ == e3n_) return false;
  if (collides_outside(e1n_, f, b1, b2)) return false;
  if (collides_outside(e2n_, f, b1, b2)) return false;
  if (collides_outside(e3n_, f, b1, b2)) return false;
  return true;
}

namespace {

// Pre-checks shared by enumeration and decoding; fills `shared`.
bool forward_blocks_ok(const Params& p, const std::vector<EdgeVec>& sorted,
                       const std::vector<EdgeKind>& kind, int f, int b1, int b2,
                       EdgeVec& shared) {
  if (b1 == b2) return false;
  if (kind[f] != EdgeKind::GoodLoop) return false;
  if (kind[b1] != EdgeKind::Proper || kind[b2] != EdgeKind::Proper) return false;
  if (!sets_disjoint(sorted[b1], sorted[f])) return false;
  if (!sets_disjoint(sorted[b2], sorted[f])) return false;
  set_intersection(sorted[b1], sorted[b2], shared);
  return static_cast<int>(shared.size()) <= p.k - 2;
}

}  // namespace

template <typename Fn>
void SwitchView::walk_forward(Fn&& fn) const {
  if (has_bad_loop_ || has_multi_edge_ || loops_.empty())
    throw DomainError("forward switchings need y in E_l with l >= 1");
  const int k = p_.k;
  for (int f : loops_) {
    for (int b1 : propers_) {
      if (!sets_disjoint(sorted_[b1], sorted_[f])) continue;
      for (int b2 : propers_) {
        if (b2 == b1) continue;
        if (!sets_disjoint(sorted_[b2], sorted_[f])) continue;
        set_intersection(sorted_[b1], sorted_[b2], shared_);
        if (static_cast<int>(shared_.size()) > k - 2) continue;
        for (int p1 = 0; p1 < k; ++p1) {
          const Vertex ys = (*y_)[b1 * k + p1];
          if (edge_contains(shared_, ys)) continue;
          for (int p2 = 0; p2 < k; ++p2) {
            const Vertex zs = (*y_)[b2 * k + p2];
            if (edge_contains(shared_, zs)) continue;
            if (forward_result_ok(f, b1, b2, ys, zs)) fn(ForwardOp{f, b1, b2, ys, zs});
          }
        }
      }
    }
  }
}

long long SwitchView::count_forward() const {
  long long count = 0;
  walk_forward([&](const ForwardOp&) { ++count; });
  return count;
}

std::vector<ForwardOp> SwitchView::enumerate_forward() const {
  std::vector<ForwardOp> ops;
  walk_forward([&](const ForwardOp& op) { ops.push_back(op); });
  return ops;
}

std::optional<ForwardOp> SwitchView::decode_raw_forward(const RawForward& raw) const {
  if (has_bad_loop_ || has_multi_edge_ || loops_.empty())
    throw DomainError("forward switchings need y in E_l with l >= 1");
  if (raw.loop_index < 0 || raw.loop_index >= static_cast<long long>(loops_.size()))
    throw DomainError("raw loop_index out of range");
  if (raw.block1 < 0 || raw.block1 >= p_.m || raw.block2 < 0 || raw.block2 >= p_.m)
    throw DomainError("raw block index out of range");
  if (raw.pos1 < 0 || raw.pos1 >= p_.k || raw.pos2 < 0 || raw.pos2 >= p_.k)
    throw DomainError("raw position out of range");

  const int f = loops_[raw.loop_index];
  const int b1 = static_cast<int>(raw.block1);
  const int b2 = static_cast<int>(raw.block2);
  if (!forward_blocks_ok(p_, sorted_, kind_, f, b1, b2, shared_)) return std::nullopt;
  const Vertex ys = (*y_)[b1 * p_.k + raw.pos1];
  const Vertex zs = (*y_)[b2 * p_.k + raw.pos2];
  if (edge_contains(shared_, ys) || edge_contains(shared_, zs)) return std::nullopt;
  if (!forward_result_ok(f, b1, b2, ys, zs)) return std::nullopt;
  return ForwardOp{f, b1, b2, ys, zs};
}

bool SwitchView::forward_op_valid(const ForwardOp& op) const {
  if (op.loop_block < 0 || op.loop_block >= p_.m) return false;
  if (op.e1_block < 0 || op.e1_block >= p_.m) return false;
  if (op.e2_block < 0 || op.e2_block >= p_.m) return false;
  if (!forward_blocks_ok(p_, sorted_, kind_, op.loop_block, op.e1_block, op.e2_block,
                         shared_))
    return false;
  if (!edge_contains(sorted_[op.e1_block], op.y_star)) return false;
  if (!edge_contains(sorted_[op.e2_block], op.z_star)) return false;
  if (edge_contains(shared_, op.y_star) || edge_contains(shared_, op.z_star)) return false;
  return forward_result_ok(op.loop_block, op.e1_block, op.e2_block, op.y_star, op.z_star);
}

bool SwitchView::backward_result_ok(const BackwardOp& op) const {
  const Vertex v = op.v;
  const EdgeVec& e3 = sorted_[op.e3_block];
  // f = e3 - {lo,hi} + {v,v}
  e3n_.clear();
  bool dropped_lo = false, dropped_hi = false;
  for (Vertex x : e3) {
    if (!dropped_lo && x == op.pair_lo) {
      dropped_lo = true;
      continue;
    }
    if (!dropped_hi && x == op.pair_hi) {
      dropped_hi = true;
      continue;
    }
    if (x == v) return false;  // v would get multiplicity >= 3
    e3n_.push_back(x);
  }
  if (!dropped_lo || !dropped_hi) return false;
  auto vpos = std::upper_bound(e3n_.begin(), e3n_.end(), v);
  e3n_.insert(vpos, v);
  vpos = std::upper_bound(e3n_.begin(), e3n_.end(), v);
  e3n_.insert(vpos, v);
  assert(classify_edge(e3n_) == EdgeKind::GoodLoop);

  replace_vertex(sorted_[op.e1_block], v, op.pair_lo, e1n_);
  replace_vertex(sorted_[op.e2_block], v, op.pair_hi, e2n_);
  if (!all_distinct(e1n_) || !all_distinct(e2n_)) return false;

  // The inverse forward op must be valid on the result: the new proper edges
  // must avoid the new loop entirely, overlap in at most k-2 vertices, and
  // keep the removed pair outside the overlap.
  if (!sets_disjoint(e1n_, e3n_)) return false;
  if (!sets_disjoint(e2n_, e3n_)) return false;
  set_intersection(e1n_, e2n_, shared_);
  if (static_cast<int>(shared_.size()) > p_.k - 2) return false;
  if (edge_contains(e2n_, op.pair_lo)) return false;
  if (edge_contains(e1n_, op.pair_hi)) return false;

  if (e1n_ == e2n_ || e1n_ == e3n_ || e2n_ == e3n_) return false;
  if (collides_outside(e1n_, op.e1_block, op.e2_block, op.e3_block)) return false;
  if (collides_outside(e2n_, op.e1_block, op.e2_block, op.e3_block)) return false;
  if (collides_outside(e3n_, op.e1_block, op.e2_block, op.e3_block)) return false;
  return true;
}

template <typename Fn>
void SwitchView::walk_backward(Fn&& fn) const {
  const int k = p_.k;
  for (Vertex v = 1; v <= p_.n; ++v) {
    const auto& pv = vertex_propers_[v];
    for (int i1 : pv) {
      for (int i2 : pv) {
        if (i2 == i1) continue;
        for (int i3 : propers_) {
          if (i3 == i1 || i3 == i2) continue;
          const EdgeVec& e3 = sorted_[i3];
          for (int pa = 0; pa < k; ++pa) {
            for (int pb = pa + 1; pb < k; ++pb) {
              BackwardOp op{v, i1, i2, i3, e3[pa], e3[pb]};
              if (backward_result_ok(op)) fn(op);
            }
          }
        }
      }
    }
  }
}

long long SwitchView::count_backward(long long cap) const {
  if (has_bad_loop_ || has_multi_edge_)
    throw DomainError("backward switchings need y in E_l");
  if (loop_count() + 1 > cap)
    throw DomainError("backward switchings from E_l need l + 1 <= L");
  long long count = 0;
  walk_backward([&](const BackwardOp&) { ++count; });
  return count;
}

std::vector<BackwardOp> SwitchView::enumerate_backward(long long cap) const {
  if (has_bad_loop_ || has_multi_edge_)
    throw DomainError("backward switchings need y in E_l");
  if (loop_count() + 1 > cap)
    throw DomainError("backward switchings from E_l need l + 1 <= L");
  std::vector<BackwardOp> ops;
  walk_backward([&](const BackwardOp& op) { ops.push_back(op); });
  return ops;
}

bool SwitchView::backward_op_valid(const BackwardOp& op, long long cap) const {
  if (has_bad_loop_ || has_multi_edge_) return false;
  if (loop_count() + 1 > cap) return false;
  if (op.e1_block < 0 || op.e1_block >= p_.m || op.e2_block < 0 || op.e2_block >= p_.m ||
      op.e3_block < 0 || op.e3_block >= p_.m)
    return false;
  if (op.e1_block == op.e2_block || op.e3_block == op.e1_block ||
      op.e3_block == op.e2_block)
    return false;
  if (kind_[op.e1_block] != EdgeKind::Proper || kind_[op.e2_block] != EdgeKind::Proper ||
      kind_[op.e3_block] != EdgeKind::Proper)
    return false;
  if (op.v < 1 || op.v > p_.n) return false;
  if (!edge_contains(sorted_[op.e1_block], op.v)) return false;
  if (!edge_contains(sorted_[op.e2_block], op.v)) return false;
  if (op.pair_lo >= op.pair_hi) return false;
  if (!edge_contains(sorted_[op.e3_block], op.pair_lo)) return false;
  if (!edge_contains(sorted_[op.e3_block], op.pair_hi)) return false;
  return backward_result_ok(op);
}

namespace {

// Positions of the doubled vertex inside a good-loop block, in order.
std::pair<int, int> loop_vertex_positions(const PermSeq& y, int k, int block, Vertex v) {
  int first = -1, second = -1;
  for (int i = 0; i < k; ++i) {
    if (y[block * k + i] == v) {
      if (first < 0)
        first = block * k + i;
      else
        second = block * k + i;
    }
  }
  if (second < 0) throw DomainError("block is not a loop at the expected vertex");
  return {first, second};
}

int position_of(const PermSeq& y, int k, int block, Vertex v) {
  for (int i = 0; i < k; ++i)
    if (y[block * k + i] == v) return block * k + i;
  throw DomainError("vertex not present in block");
}

Vertex doubled_vertex(const PermSeq& y, int k, int block) {
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (y[block * k + i] == y[block * k + j]) return y[block * k + i];
  throw DomainError("block has no repeated vertex");
}

}  // namespace

PermSeq apply_forward(const Params& p, const PermSeq& y, const ForwardOp& op) {
  const int k = p.k;
  const Vertex v = doubled_vertex(y, k, op.loop_block);
  const auto [left, right] = loop_vertex_positions(y, k, op.loop_block, v);
  const int q1 = position_of(y, k, op.e1_block, op.y_star);
  const int q2 = position_of(y, k, op.e2_block, op.z_star);
  PermSeq z = y;
  std::swap(z[left], z[q1]);
  std::swap(z[right], z[q2]);
  return z;
}

PermSeq apply_backward(const Params& p, const PermSeq& y, const BackwardOp& op) {
  const int k = p.k;
  const int q1 = position_of(y, k, op.e1_block, op.v);
  const int q2 = position_of(y, k, op.e2_block, op.v);
  const int r_lo = position_of(y, k, op.e3_block, op.pair_lo);
  const int r_hi = position_of(y, k, op.e3_block, op.pair_hi);
  PermSeq z = y;
  std::swap(z[q1], z[r_lo]);
  std::swap(z[q2], z[r_hi]);
  return z;
}

BackwardOp forward_inverse(const Params& p, const PermSeq& y, const ForwardOp& op) {
  const Vertex v = doubled_vertex(y, p.k, op.loop_block);
  BackwardOp inv;
  inv.v = v;
  inv.e3_block = op.loop_block;
  if (op.y_star < op.z_star) {
    inv.e1_block = op.e1_block;
    inv.e2_block = op.e2_block;
    inv.pair_lo = op.y_star;
    inv.pair_hi = op.z_star;
  } else {
    inv.e1_block = op.e2_block;
    inv.e2_block = op.e1_block;
    inv.pair_lo = op.z_star;
    inv.pair_hi = op.y_star;
  }
  return inv;
}

ForwardOp backward_inverse(const Params& p, const PermSeq& y, const BackwardOp& op) {
  const int r_lo = position_of(y, p.k, op.e3_block, op.pair_lo);
  const int r_hi = position_of(y, p.k, op.e3_block, op.pair_hi);
  ForwardOp inv;
  inv.loop_block = op.e3_block;
  // The forward convention swaps y* with the left copy of v. The backward
  // application puts v at the removed vertices' positions, so the edge whose
  // removed vertex sat further left takes the e1 role.
  if (r_lo < r_hi) {
    inv.e1_block = op.e1_block;
    inv.e2_block = op.e2_block;
    inv.y_star = op.pair_lo;
    inv.z_star = op.pair_hi;
  } else {
    inv.e1_block = op.e2_block;
    inv.e2_block = op.e1_block;
    inv.y_star = op.pair_hi;
    inv.z_star = op.pair_lo;
  }
  return inv;
}

}  // namespace hyperreg

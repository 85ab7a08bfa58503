#pragma once

#include <optional>
#include <vector>

#include "hyperreg/perm.hpp"

namespace hyperreg {

// Forward switching: remove the loop at block `loop_block` (doubled vertex v)
// using the ordered pair of proper blocks (e1_block, e2_block). y_star lies in
// e1 outside e1&e2, z_star in e2 outside e1&e2. At permutation level the left
// copy of v swaps with y_star's position, the right copy with z_star's.
struct ForwardOp {
  int loop_block = -1;
  int e1_block = -1;
  int e2_block = -1;
  Vertex y_star = 0;
  Vertex z_star = 0;

  auto operator<=>(const ForwardOp&) const = default;
};

// Backward switching: create a loop at vertex v from the ordered pair of
// proper blocks (e1_block, e2_block) both containing v, turning block
// e3_block into the loop. Of the removed pair {pair_lo < pair_hi}, the low
// vertex attaches to e1_block and the high one to e2_block.
struct BackwardOp {
  Vertex v = 0;
  int e1_block = -1;
  int e2_block = -1;
  int e3_block = -1;
  Vertex pair_lo = 0;
  Vertex pair_hi = 0;

  auto operator<=>(const BackwardOp&) const = default;
};

// Raw coordinates realizing the F_l = l*m^2*k^2 sample space. pos1/pos2 index
// positions inside the chosen blocks as they appear in the permutation.
struct RawForward {
  long long loop_index = 0;  // in [0, l)
  long long block1 = 0;      // in [0, m)
  long long block2 = 0;      // in [0, m)
  int pos1 = 0;              // in [0, k)
  int pos2 = 0;              // in [0, k)
};

// F_l = d^2 n^2 l (= k^2 m^2 l), the uniform upper bound on F(y) over E_l.
BigInt forward_upper_bound(const Params& p, long long l);

// B = (k-1)/2 * n^2 d^2 (d-1) = n (d)_2 m C(k,2), upper bound on B(y).
BigRat backward_upper_bound(const Params& p);

struct Delta1 {
  BigRat value;
  bool valid_regime = false;  // value < 1
};

// Explicit pre-asymptotic deficiency bound with l at its maximum L:
// delta1 = C(k,2) (2kLdm + Lnd(d-1) + 2k^2 n d^4) / B. Requires d >= 2.
Delta1 delta1_formula(const Params& p, long long cap);

// Prepared view of one permutation for switching enumeration. Rebuild is
// O(nd log k); enumeration routines allocate nothing on the hot path.
class SwitchView {
 public:
  explicit SwitchView(const Params& p);
  SwitchView(const Params& p, const PermSeq& y);

  void rebuild(const PermSeq& y);

  int loop_count() const { return static_cast<int>(loops_.size()); }
  int good_loop_count() const { return good_loops_; }
  bool has_bad_loop() const { return has_bad_loop_; }
  bool has_multi_edge() const { return has_multi_edge_; }
  // Level l such that y is in E_l, or nullopt.
  std::optional<int> level(long long cap) const;

  // Count/list all valid forward switchings; F(y). Requires y in E_l, l >= 1.
  long long count_forward() const;
  std::vector<ForwardOp> enumerate_forward() const;

  // Count/list all valid backward switchings; B(y). Requires y in E_l with
  // l + 1 <= cap (the result must stay inside E).
  long long count_backward(long long cap) const;
  std::vector<BackwardOp> enumerate_backward(long long cap) const;

  // Decode a raw tuple into a valid ForwardOp, or nullopt if the tuple is
  // structurally or result-invalid. Valid raw tuples are in bijection with
  // enumerate_forward(); drawing raws uniformly from the l*m^2*k^2 space and
  // restarting on nullopt realizes the F(y)/F_l acceptance implicitly.
  std::optional<ForwardOp> decode_raw_forward(const RawForward& raw) const;

  bool forward_op_valid(const ForwardOp& op) const;
  bool backward_op_valid(const BackwardOp& op, long long cap) const;

 private:
  // Visit every valid op in raw-tuple order; defined in the implementation
  // file, used only there.
  template <typename Fn>
  void walk_forward(Fn&& fn) const;
  template <typename Fn>
  void walk_backward(Fn&& fn) const;

  bool forward_result_ok(int f, int b1, int b2, Vertex ys, Vertex zs) const;
  bool backward_result_ok(const BackwardOp& op) const;
  // Candidate edge collides with a block other than the three replaced ones.
  bool collides_outside(const EdgeVec& cand, int r1, int r2, int r3) const;

  Params p_;
  const PermSeq* y_ = nullptr;
  std::vector<EdgeVec> sorted_;           // canonical edge per block
  std::vector<EdgeKind> kind_;
  std::vector<int> loops_;                // loop block indices, block order
  std::vector<int> propers_;              // proper block indices, block order
  std::vector<Vertex> loop_vertex_;       // doubled vertex, loops only
  std::vector<std::vector<int>> vertex_propers_;  // v -> proper blocks with v
  std::vector<int> lookup_;               // block indices sorted by edge
  int good_loops_ = 0;
  bool has_bad_loop_ = false;
  bool has_multi_edge_ = false;
  // scratch buffers for validity checks
  mutable EdgeVec shared_, e1n_, e2n_, e3n_, fset_;
};

// Apply op to y; the result has one loop fewer. Positions outside the three
// replaced blocks are untouched.
PermSeq apply_forward(const Params& p, const PermSeq& y, const ForwardOp& op);

// Apply op to y; the result has one loop more. Exact positional inverse of
// the corresponding forward op.
PermSeq apply_backward(const Params& p, const PermSeq& y, const BackwardOp& op);

// The backward op on apply_forward(y, op) that restores y bit-exactly.
BackwardOp forward_inverse(const Params& p, const PermSeq& y, const ForwardOp& op);

// The forward op on apply_backward(y, op) that restores y bit-exactly.
ForwardOp backward_inverse(const Params& p, const PermSeq& y, const BackwardOp& op);

}  // namespace hyperreg

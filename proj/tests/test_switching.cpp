#include <doctest.h>

#include <algorithm>
#include <set>

#include "hyperreg/switching.hpp"

using namespace hyperreg;

namespace {

// The worked instance at (n=9,d=2,k=3): blocks
// (1,1,2)(3,4,5)(6,7,8)(2,3,6)(4,7,9)(5,8,9); block 0 is a loop at 1.
const PermSeq kWorked = {1, 1, 2, 3, 4, 5, 6, 7, 8, 2, 3, 6, 4, 7, 9, 5, 8, 9};

PermSeq sample_in_level(const Params& p, const LPolicy& pol, Rng& rng, int min_level,
                        long long max_tries = 200'000) {
  const long long cap = pol.loop_cap(p);
  PermClassifier cls(p);
  PermSeq y;
  for (long long i = 0; i < max_tries; ++i) {
    sample_permutation_into(p, rng, y);
    const Classification& c = cls.classify(y, cap);
    if (c.level && *c.level >= min_level) return y;
  }
  throw std::runtime_error("no permutation of the requested level found");
}

}  // namespace

TEST_CASE("switching constants") {
  CHECK(forward_upper_bound(Params::create(4, 3, 3), 1) == 144);
  CHECK(backward_upper_bound(Params::create(4, 3, 3)) == BigRat(288));
  CHECK(backward_upper_bound(Params::create(500, 3, 3)) == BigRat(4'500'000));
  CHECK(backward_upper_bound(Params::create(6, 1, 3)) == BigRat(0));
  CHECK_THROWS_AS(forward_upper_bound(Params::create(4, 3, 3), 0), DomainError);

  // d^2 n^2 l = k^2 m^2 l, and B/F_l = (k-1)(d-1)/(2l)
  for (const Params& p : {Params::create(6, 2, 3), Params::create(100, 6, 3),
                          Params::create(8, 2, 4), Params::create(500, 3, 3)}) {
    for (long long l = 1; l <= 3; ++l) {
      const BigInt fl = forward_upper_bound(p, l);
      CHECK(fl == BigInt(p.k) * p.k * p.m * p.m * l);
      CHECK(backward_upper_bound(p) / BigRat(fl) ==
            BigRat(static_cast<long long>(p.k - 1) * (p.d - 1), 2 * l));
    }
  }
}

TEST_CASE("delta1 formula values and regime flag") {
  const Delta1 big = delta1_formula(Params::create(500, 3, 3), 38);
  CHECK(big.value == BigRat(3'555'000, 4'500'000));
  CHECK(big.valid_regime);

  const Delta1 tiny = delta1_formula(Params::create(6, 2, 3), 3);
  CHECK(tiny.value == BigRat(5724, 144));
  CHECK_FALSE(tiny.valid_regime);

  CHECK_THROWS_AS(delta1_formula(Params::create(6, 1, 3), 2), DomainError);

  // vanishes as n grows with d, k fixed
  BigRat prev;
  bool first = true;
  for (int n : {1'000, 10'000, 100'000}) {
    const Params p = Params::create(n, 3, 3);
    const BigRat v = delta1_formula(p, LPolicy::sqrt_nd().loop_cap(p)).value;
    if (!first) CHECK(v < prev);
    prev = v;
    first = false;
  }
  CHECK(prev < BigRat(1, 10));
}

TEST_CASE("worked example: op validity, application, ordered variants") {
  const Params p = Params::create(9, 2, 3);
  SwitchView view(p, kWorked);
  CHECK(view.loop_count() == 1);
  CHECK(view.level(4) == 1);

  const ForwardOp valid{0, 1, 2, 4, 6};
  const ForwardOp invalid{0, 1, 2, 3, 6};  // e3' = {2,3,6} duplicates block 3
  CHECK(view.forward_op_valid(valid));
  CHECK_FALSE(view.forward_op_valid(invalid));

  const auto ops = view.enumerate_forward();
  CHECK(std::count(ops.begin(), ops.end(), valid) == 1);
  CHECK(std::count(ops.begin(), ops.end(), invalid) == 0);
  CHECK(static_cast<long long>(ops.size()) == view.count_forward());

  const PermSeq expected = {4, 6, 2, 3, 1, 5, 1, 7, 8, 2, 3, 6, 4, 7, 9, 5, 8, 9};
  const PermSeq z = apply_forward(p, kWorked, valid);
  CHECK(z == expected);
  SwitchView zview(p, z);
  CHECK(zview.loop_count() == 0);
  CHECK(zview.level(4) == 0);

  // the two ordered variants of one configuration give different outputs
  const ForwardOp swapped{0, 2, 1, 6, 4};
  CHECK(view.forward_op_valid(swapped));
  CHECK(apply_forward(p, kWorked, swapped) != z);

  // label counts preserved
  CHECK(is_valid_perm(p, z));
}

TEST_CASE("worked example: inverse backward restores the permutation") {
  const Params p = Params::create(9, 2, 3);
  const ForwardOp op{0, 1, 2, 4, 6};
  const PermSeq z = apply_forward(p, kWorked, op);

  const BackwardOp inv = forward_inverse(p, kWorked, op);
  CHECK(inv.v == 1);
  CHECK(inv.e3_block == 0);
  CHECK(inv.e1_block == 1);  // y* = 4 < z* = 6
  CHECK(inv.e2_block == 2);
  CHECK(inv.pair_lo == 4);
  CHECK(inv.pair_hi == 6);

  SwitchView zview(p, z);
  CHECK(zview.backward_op_valid(inv, 4));
  CHECK(apply_backward(p, z, inv) == kWorked);

  // lambda rises by exactly one under the backward op
  SwitchView back(p, apply_backward(p, z, inv));
  CHECK(back.loop_count() == zview.loop_count() + 1);
}

TEST_CASE("round trips over random permutations at (3,9,2)") {
  const Params p = Params::create(9, 2, 3);
  const LPolicy pol = LPolicy::sqrt_nd();
  const long long cap = pol.loop_cap(p);
  Rng rng(99);

  int forward_trips = 0, backward_trips = 0;
  while (forward_trips < 300 || backward_trips < 300) {
    const PermSeq y = sample_in_level(p, pol, rng, 0);
    SwitchView view(p, y);
    if (view.loop_count() >= 1 && forward_trips < 300) {
      for (const ForwardOp& op : view.enumerate_forward()) {
        const PermSeq z = apply_forward(p, y, op);
        const BackwardOp inv = forward_inverse(p, y, op);
        SwitchView zview(p, z);
        REQUIRE(zview.backward_op_valid(inv, cap));
        REQUIRE(apply_backward(p, z, inv) == y);
        // the induced forward op of the inverse is the original op
        REQUIRE(backward_inverse(p, z, inv) == op);
        ++forward_trips;
      }
    }
    if (view.loop_count() + 1 <= cap && backward_trips < 300) {
      for (const BackwardOp& op : view.enumerate_backward(cap)) {
        const PermSeq w = apply_backward(p, y, op);
        const ForwardOp inv = backward_inverse(p, y, op);
        SwitchView wview(p, w);
        REQUIRE(wview.level(cap).has_value());
        REQUIRE(*wview.level(cap) == view.loop_count() + 1);
        REQUIRE(wview.forward_op_valid(inv));
        REQUIRE(apply_forward(p, w, inv) == y);
        ++backward_trips;
      }
    }
  }
}

TEST_CASE("forward results land one level down, backward one level up") {
  const Params p = Params::create(9, 2, 3);
  const LPolicy pol = LPolicy::sqrt_nd();
  const long long cap = pol.loop_cap(p);
  Rng rng(123);
  for (int i = 0; i < 40; ++i) {
    const PermSeq y = sample_in_level(p, pol, rng, 1);
    SwitchView view(p, y);
    const int l = view.loop_count();
    for (const ForwardOp& op : view.enumerate_forward()) {
      SwitchView zv(p, apply_forward(p, y, op));
      REQUIRE(zv.level(cap) == l - 1);
    }
  }
}

TEST_CASE("raw decoding is a bijection onto the valid ops") {
  const Params p = Params::create(9, 2, 3);
  const LPolicy pol = LPolicy::sqrt_nd();
  Rng rng(2718);
  for (int i = 0; i < 60; ++i) {
    const PermSeq y = sample_in_level(p, pol, rng, 1);
    SwitchView view(p, y);
    const auto ops = view.enumerate_forward();
    std::set<ForwardOp> decoded;
    const int l = view.loop_count();
    for (long long li = 0; li < l; ++li)
      for (long long b1 = 0; b1 < p.m; ++b1)
        for (long long b2 = 0; b2 < p.m; ++b2)
          for (int p1 = 0; p1 < p.k; ++p1)
            for (int p2 = 0; p2 < p.k; ++p2) {
              if (auto op = view.decode_raw_forward({li, b1, b2, p1, p2})) {
                CHECK(view.forward_op_valid(*op));
                decoded.insert(*op);
              }
            }
    CHECK(decoded.size() == ops.size());
    for (const auto& op : ops) CHECK(decoded.count(op) == 1);
  }
}

TEST_CASE("raw decoding rejects structurally impossible tuples") {
  const Params p = Params::create(9, 2, 3);
  SwitchView view(p, kWorked);
  // block1 pointing at the loop block
  CHECK_FALSE(view.decode_raw_forward({0, 0, 2, 0, 0}).has_value());
  // equal blocks
  CHECK_FALSE(view.decode_raw_forward({0, 1, 1, 0, 1}).has_value());
  // e1 = block 3 = {2,3,6} intersects the loop {1,1,2}
  CHECK_FALSE(view.decode_raw_forward({0, 3, 2, 0, 0}).has_value());
  // out-of-range raw coordinates are a caller bug, not a rejection
  CHECK_THROWS_AS(view.decode_raw_forward({1, 0, 2, 0, 0}), DomainError);
  CHECK_THROWS_AS(view.decode_raw_forward({0, 0, 2, 3, 0}), DomainError);
}

TEST_CASE("shared vertices of e1 and e2 are excluded from the star choices") {
  // blocks: loop (1,1,2), e1 (3,4,5), e2 (3,6,7) share vertex 3;
  // remaining blocks keep the degrees balanced.
  const Params p = Params::create(9, 2, 3);
  const PermSeq y = {1, 1, 2, 3, 4, 5, 3, 6, 7, 2, 8, 9, 4, 6, 8, 5, 7, 9};
  SwitchView view(p, y);
  REQUIRE(view.level(4) == 1);
  for (const ForwardOp& op : view.enumerate_forward()) {
    if (op.e1_block == 1 && op.e2_block == 2) {
      CHECK(op.y_star != 3);
      CHECK(op.z_star != 3);
    }
  }
  // raw position pointing at the shared vertex decodes to nothing
  CHECK_FALSE(view.decode_raw_forward({0, 1, 2, 0, 0}).has_value());
}

TEST_CASE("backward enumeration is empty for d = 1") {
  const Params p = Params::create(6, 1, 3);
  Rng rng(7);
  const PermSeq y = sample_permutation(p, rng);
  SwitchView view(p, y);
  CHECK(view.count_backward(LPolicy::sqrt_nd().loop_cap(p)) == 0);
}

TEST_CASE("backward enumeration refuses to leave E") {
  const Params p = Params::create(3, 2, 3);  // L = 2, E_2 members exist
  const PermSeq y = {1, 1, 2, 2, 3, 3};
  SwitchView view(p, y);
  REQUIRE(view.level(2) == 2);
  CHECK_THROWS_AS(view.count_backward(2), DomainError);  // l + 1 > L
}

TEST_CASE("forward enumeration requires at least one loop") {
  const Params p = Params::create(6, 1, 3);
  Rng rng(8);
  const PermSeq y = sample_permutation(p, rng);
  SwitchView view(p, y);
  CHECK_THROWS_AS(view.count_forward(), DomainError);
}

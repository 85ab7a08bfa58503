#include <doctest.h>

#include <map>
#include <set>

#include "hyperreg/perm.hpp"
#include "hyperreg/stats.hpp"

using namespace hyperreg;

TEST_CASE("params validation and derived quantities") {
  const Params p = Params::create(6, 2, 3);
  CHECK(p.m == 4);
  CHECK(p.kappa() == BigRat(1, 2));

  CHECK_THROWS_AS(Params::create(5, 2, 3), DomainError);  // 3 does not divide 10
  CHECK_THROWS_AS(Params::create(6, 2, 2), DomainError);  // graph case out of scope
  CHECK_THROWS_AS(Params::create(2, 3, 3), DomainError);  // n < k
  CHECK_THROWS_AS(Params::create(0, 1, 3), DomainError);
  CHECK_THROWS_AS(Params::create(6, 0, 3), DomainError);

  const Params q = Params::create(4, 3, 3);
  CHECK(q.m == 4);
  CHECK(q.kappa() == BigRat(1, 2));
  CHECK(q.outside_regime);  // d^2 = 9 >= n = 4

  const Params r = Params::create(8, 1, 4);
  CHECK(r.m == 2);
  CHECK(r.kappa() == BigRat(1));
  CHECK_FALSE(r.outside_regime);
}

TEST_CASE("loop cap policies") {
  const Params p = Params::create(6, 2, 3);
  CHECK(LPolicy::sqrt_nd().loop_cap(p) == 3);  // floor(sqrt(12))
  CHECK(LPolicy::kd_omega(10).loop_cap(p) == 16);
  CHECK(LPolicy::sqrt_nd().loop_cap(Params::create(500, 3, 3)) == 38);
  CHECK_THROWS_AS(LPolicy::kd_omega(0), DomainError);
}

TEST_CASE("edge classification") {
  CHECK(classify_edge(EdgeVec{3, 4, 5}) == EdgeKind::Proper);
  CHECK(classify_edge(EdgeVec{5, 5, 7}) == EdgeKind::GoodLoop);
  CHECK(classify_edge(EdgeVec{5, 5, 5}) == EdgeKind::BadLoopMult3);
  CHECK(classify_edge(EdgeVec{1, 1, 2, 2}) == EdgeKind::BadLoopTwoRepeats);
  CHECK(classify_edge(EdgeVec{1, 1, 1, 2}) == EdgeKind::BadLoopMult3);
  CHECK(classify_edge(EdgeVec{2, 3, 3, 4}) == EdgeKind::GoodLoop);
}

TEST_CASE("sampling keeps the degree multiset and is deterministic") {
  const Params p = Params::create(6, 2, 3);
  Rng rng(12345);
  for (int i = 0; i < 200; ++i) CHECK(is_valid_perm(p, sample_permutation(p, rng)));

  Rng r1(777), r2(777);
  CHECK(sample_permutation(p, r1) == sample_permutation(p, r2));

  const Params single = Params::create(6, 1, 3);
  Rng r3(9);
  const PermSeq y = sample_permutation(single, r3);
  CHECK(std::set<Vertex>(y.begin(), y.end()).size() == 6);
}

TEST_CASE("multigraph construction from blocks") {
  const Params p = Params::create(6, 1, 3);
  const Multigraph g = build_multigraph(p, {1, 2, 3, 4, 5, 6});
  CHECK(g.edges == std::vector<EdgeVec>{{1, 2, 3}, {4, 5, 6}});
  CHECK(g.is_simple());
  CHECK(g.is_regular(1));

  // block order and in-block order do not matter for the canonical form
  CHECK(build_multigraph(p, {6, 5, 4, 3, 1, 2}) == g);

  const Params q = Params::create(3, 2, 3);
  const Multigraph h = build_multigraph(q, {1, 1, 2, 2, 3, 3});
  CHECK(h.edges == std::vector<EdgeVec>{{1, 1, 2}, {2, 3, 3}});
  CHECK(h.degrees() == std::vector<int>{2, 2, 2});
  CHECK_FALSE(h.is_simple());

  CHECK_THROWS_AS(build_multigraph(p, {1, 2, 3}), DomainError);
}

TEST_CASE("permutation classification") {
  const LPolicy pol = LPolicy::sqrt_nd();

  const Params p = Params::create(3, 2, 3);  // L = 2
  const Classification two_loops = classify_perm(p, {1, 1, 2, 2, 3, 3}, pol);
  CHECK(two_loops.loop_blocks == 2);
  CHECK(two_loops.good_loops == 2);
  CHECK(two_loops.level == 2);

  const Classification multi = classify_perm(p, {1, 2, 3, 1, 2, 3}, pol);
  CHECK(multi.has_multi_edge);
  CHECK_FALSE(multi.level.has_value());

  const Params q = Params::create(3, 3, 3);
  const Classification bad = classify_perm(q, {1, 1, 1, 2, 2, 2, 3, 3, 3}, pol);
  CHECK(bad.has_bad_loop);
  CHECK_FALSE(bad.level.has_value());
  CHECK(bad.loop_blocks == 3);
  CHECK(bad.good_loops == 0);

  // lambda equals the number of non-proper blocks in every case
  Rng rng(4);
  PermClassifier cls(p);
  for (int i = 0; i < 200; ++i) {
    const PermSeq y = sample_permutation(p, rng);
    const Classification& c = cls.classify(y, 2);
    int loops = 0;
    for (EdgeKind kk : cls.kinds()) loops += is_loop(kk) ? 1 : 0;
    CHECK(c.loop_blocks == loops);
  }
}

TEST_CASE("exhaustive (3,3,2): 90 permutations, frozen class sizes") {
  const Params p = Params::create(3, 2, 3);
  PermSeq y = canonical_perm(p);
  std::set<PermSeq> seen;
  std::map<int, int> level_counts;
  const LPolicy pol = LPolicy::sqrt_nd();
  PermClassifier cls(p);
  long long total = 0;
  do {
    ++total;
    seen.insert(y);
    const Classification& c = cls.classify(y, pol.loop_cap(p));
    if (c.level) ++level_counts[*c.level];
  } while (next_perm(y));

  CHECK(total == 90);  // 6!/(2!)^3
  CHECK(seen.size() == 90);
  // frozen regression values from the exhaustive scan
  CHECK(level_counts[0] == 0);
  CHECK(level_counts[1] == 0);
  CHECK(level_counts[2] == 54);
}

TEST_CASE("sampling uniformity: chi-square over all 90 sequences at (3,3,2)") {
  const Params p = Params::create(3, 2, 3);
  std::map<PermSeq, int> index;
  PermSeq y = canonical_perm(p);
  int c = 0;
  do {
    index[y] = c++;
  } while (next_perm(y));
  REQUIRE(c == 90);

  std::vector<long long> counts(90, 0);
  const long long n = 20'000;
  for (long long i = 0; i < n; ++i) {
    Rng rng(Rng::child_seed(2024, i));
    ++counts[index.at(sample_permutation(p, rng))];
  }
  const ChiSquareResult res = chi_square_from_counts(counts);
  CHECK(res.n == n);
  CHECK(res.df == 89);
  CHECK(res.p_value > 0.001);
}

TEST_CASE("exact bernoulli matches its rational probability") {
  Rng rng(31337);
  const BigRat p(3, 7);
  long long hits = 0;
  const long long n = 200'000;
  for (long long i = 0; i < n; ++i) hits += rng.bernoulli(p) ? 1 : 0;
  const double rate = static_cast<double>(hits) / n;
  CHECK(rate == doctest::Approx(3.0 / 7.0).epsilon(0.02));

  CHECK_FALSE(rng.bernoulli(BigRat(0)));
  CHECK(rng.bernoulli(BigRat(1)));
  // dyadic probabilities terminate via the num == 0 path
  long long h2 = 0;
  for (long long i = 0; i < n; ++i) h2 += rng.bernoulli(BigRat(1, 4)) ? 1 : 0;
  CHECK(static_cast<double>(h2) / n == doctest::Approx(0.25).epsilon(0.03));
}

TEST_CASE("bounded draws are unbiased across small ranges") {
  Rng rng(5);
  std::vector<long long> counts(7, 0);
  for (int i = 0; i < 70'000; ++i) ++counts[rng.below(7)];
  CHECK(chi_square_from_counts(counts).p_value > 0.001);
}

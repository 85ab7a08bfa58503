#include <doctest.h>

#include "hyperreg/stats.hpp"

using namespace hyperreg;

TEST_CASE("exact loop indicator") {
  CHECK(exact_loop_indicator(Params::create(4, 3, 3)) == BigRat(27, 55));
  CHECK(exact_loop_indicator(Params::create(6, 1, 3)) == BigRat(0));

  // n * E I_i approaches C(k,2)(d-1)/d for k = 3, d = 3
  const Params big = Params::create(999'999, 3, 3);
  const BigRat scaled = BigRat(big.n) * exact_loop_indicator(big);
  const BigRat limit(2);  // 3 * 2/3
  CHECK(abs(to_big_float(scaled - limit, 30)) < to_big_float(limit, 30) * 0.01);
}

TEST_CASE("exact pair collision via the composition sum") {
  CHECK(exact_pair_collision(Params::create(4, 3, 3)) == BigRat(18, 385));
  CHECK(exact_pair_collision(Params::create(3, 2, 3)) == BigRat(2, 5));
  CHECK(exact_pair_collision(Params::create(6, 1, 3)) == BigRat(0));
}

TEST_CASE("exact expectations bundle") {
  const ExactExpectations e = exact_expectations(Params::create(4, 3, 3));
  CHECK(e.e_lambda == BigRat(108, 55));
  CHECK(e.asymptote == BigRat(2));
}

TEST_CASE("exhaustive summary at (3,3,2) reproduces the exact rationals") {
  const ExhaustiveSummary s =
      exhaustive_summary(Params::create(3, 2, 3), LPolicy::sqrt_nd(), CostGuard{});
  CHECK(s.p_size == 90);
  CHECK(s.lambda_mean == BigRat(6, 5));  // 108/90, equals m * E I_i = 2 * 3/5
  CHECK(s.lambda_mean == exact_expectations(Params::create(3, 2, 3)).e_lambda);
  CHECK(s.multi_edge_pair_rate == BigRat(2, 5));  // matches the composition sum
  CHECK(s.multi_edge_pair_rate == exact_pair_collision(Params::create(3, 2, 3)));
  CHECK(s.fraction_in_e == BigRat(54, 90));
  CHECK(s.bad_loop_rate_mult3 == BigRat(0));  // d = 2 cannot triple a vertex
}

TEST_CASE("monte-carlo summary concentrates on the exact values") {
  const Params p = Params::create(6, 2, 3);
  const McSummary s = mc_summary(p, 20'000, LPolicy::sqrt_nd(), 42);
  const ExactExpectations e = exact_expectations(p);
  const double exact_lambda = static_cast<double>(to_big_float(e.e_lambda, 20));
  CHECK(std::abs(s.lambda_mean - exact_lambda) < 5 * s.lambda_se);
  const double exact_pair = static_cast<double>(to_big_float(e.pair_collision, 20));
  CHECK(std::abs(s.multi_edge_pair_rate - exact_pair) <
        5 * std::max(s.multi_edge_pair_rate_se, 1e-4));
  CHECK(s.fraction_in_e > 0);
  CHECK(s.fraction_in_e < 1);
}

TEST_CASE("monte-carlo is parallel-invariant and does not depend on job count") {
  const Params p = Params::create(6, 2, 3);
  const McSummary a = mc_summary(p, 5'000, LPolicy::sqrt_nd(), 7, 1);
  const McSummary b = mc_summary(p, 5'000, LPolicy::sqrt_nd(), 7, 4);
  CHECK(a.lambda_mean == b.lambda_mean);
  CHECK(a.fraction_in_e == b.fraction_in_e);
  CHECK(a.multi_edge_pair_rate == b.multi_edge_pair_rate);
  CHECK(a.tail_exceed_rate == b.tail_exceed_rate);
}

TEST_CASE("standard errors shrink with the sample size") {
  const Params p = Params::create(6, 2, 3);
  const McSummary small = mc_summary(p, 4'000, LPolicy::sqrt_nd(), 11);
  const McSummary large = mc_summary(p, 16'000, LPolicy::sqrt_nd(), 11);
  CHECK(large.lambda_se < small.lambda_se);
  const double ratio = small.lambda_se / large.lambda_se;
  CHECK(ratio > 1.5);
  CHECK(ratio < 2.7);
}

TEST_CASE("chi-square basics") {
  // perfectly uniform counts
  const ChiSquareResult flat = chi_square_from_counts({10, 10, 10, 10});
  CHECK(flat.statistic == 0);
  CHECK(flat.p_value == 1);

  // all mass on one class
  const ChiSquareResult spike = chi_square_from_counts({500, 0, 0, 0, 0});
  CHECK(spike.p_value < 1e-6);

  // permutation invariance in class order
  const ChiSquareResult x = chi_square_from_counts({5, 9, 14, 2});
  const ChiSquareResult y = chi_square_from_counts({14, 2, 9, 5});
  CHECK(x.statistic == y.statistic);
  CHECK(x.p_value == y.p_value);

  CHECK_THROWS_AS(chi_square_from_counts({10}), DomainError);
}

TEST_CASE("chi-square class lookup rejects foreign samples") {
  Multigraph a{6, 3, {{1, 2, 3}, {4, 5, 6}}};
  Multigraph b{6, 3, {{1, 2, 4}, {3, 5, 6}}};
  Multigraph other{6, 3, {{1, 2, 5}, {3, 4, 6}}};
  const std::vector<Multigraph> classes = {a, b};
  CHECK(chi_square_uniformity({a, b, a}, classes).n == 3);
  CHECK_THROWS_AS(chi_square_uniformity({other}, classes), DomainError);
}

TEST_CASE("ratio table per level") {
  // (3,3,2): only E_2 is populated; the l = 2 row has no finite ratio
  const auto rows = ratio_table(Params::create(3, 2, 3), LPolicy::sqrt_nd(), CostGuard{});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].level == 2);
  CHECK(rows[0].size == 54);
  CHECK(rows[0].size_prev == 0);
  CHECK_FALSE(rows[0].ratio.has_value());
  CHECK(rows[0].reference == BigRat(1, 2));  // (k-1)(d-1)/(2l) = 2/4

  // d = 1: no loops, empty table
  CHECK(ratio_table(Params::create(6, 1, 3), LPolicy::sqrt_nd(), CostGuard{}).empty());
}

TEST_CASE("tail rate under the kd-omega policy is tiny at moderate scale") {
  const Params p = Params::create(200, 3, 3);
  const McSummary s = mc_summary(p, 20'000, LPolicy::kd_omega(10), 5);
  CHECK(s.cap == 19);
  CHECK(s.tail_exceed_rate < 0.05);
}

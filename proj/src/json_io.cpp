#include "hyperreg/json_io.hpp"

#include <sstream>

namespace hyperreg {

std::string hypergraph_record(const Params& p, const Multigraph& g) {
  std::ostringstream out;
  out << "{\"n\":" << p.n << ",\"d\":" << p.d << ",\"k\":" << p.k << ",\"edges\":[";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (size_t j = 0; j < g.edges[i].size(); ++j) {
      if (j) out << ',';
      out << g.edges[i][j];
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

std::string permutation_record(const PermSeq& y) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < y.size(); ++i) {
    if (i) out << ',';
    out << y[i];
  }
  out << ']';
  return out.str();
}

Json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<int64_t>::min();
  static const BigInt hi = std::numeric_limits<int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<int64_t>(v);
  return v.str();
}

Json rat_to_json(const BigRat& r) { return r.str(); }

Json float_to_json(const BigFloat& f) { return f.str(); }

Json to_json(const Params& p) {
  return Json{{"n", p.n},
              {"d", p.d},
              {"k", p.k},
              {"m", p.m},
              {"kappa", p.kappa_is_half() ? "1/2" : "1"},
              {"outside_regime", p.outside_regime}};
}

Json to_json(const Classification& c) {
  Json j{{"loop_blocks", c.loop_blocks},
         {"good_loops", c.good_loops},
         {"has_multi_edge", c.has_multi_edge},
         {"has_bad_loop", c.has_bad_loop},
         {"cap", c.cap}};
  j["level"] = c.level ? Json(*c.level) : Json(nullptr);
  return j;
}

Json to_json(const ForwardOp& op) {
  return Json{{"type", "forward"},  {"loop_block", op.loop_block},
              {"e1_block", op.e1_block}, {"e2_block", op.e2_block},
              {"y_star", op.y_star},     {"z_star", op.z_star}};
}

Json to_json(const BackwardOp& op) {
  return Json{{"type", "backward"}, {"v", op.v},
              {"e1_block", op.e1_block}, {"e2_block", op.e2_block},
              {"e3_block", op.e3_block}, {"pair", Json::array({op.pair_lo, op.pair_hi})}};
}

Json to_json(const CountReport& r) {
  Json j;
  j["exact_count"] = r.exact_count ? big_to_json(*r.exact_count) : Json(nullptr);
  j["formula_leading"] = rat_to_json(r.formula_leading);
  j["correction"] = float_to_json(r.correction);
  j["estimate"] = float_to_json(r.estimate);
  j["ratio"] = r.ratio ? float_to_json(*r.ratio) : Json(nullptr);
  j["error_scale"] = r.error_scale;
  j["precision_digits"] = r.digits;
  return j;
}

Json to_json(const LevelRatioRow& row) {
  Json j{{"level", row.level},
         {"size_prev", big_to_json(row.size_prev)},
         {"size", big_to_json(row.size)}};
  j["ratio"] = row.ratio ? rat_to_json(*row.ratio) : Json(nullptr);
  j["reference"] = rat_to_json(row.reference);
  j["lower"] = row.lower ? rat_to_json(*row.lower) : Json(nullptr);
  j["upper"] = row.upper ? rat_to_json(*row.upper) : Json(nullptr);
  return j;
}

Json to_json(const std::vector<LevelRatioRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) arr.push_back(to_json(row));
  return arr;
}

Json to_json(const CompareReport& r) {
  Json j = to_json(r.count);
  j["p_size"] = big_to_json(r.p_size);
  j["e0_size"] = r.e0_size ? big_to_json(*r.e0_size) : Json(nullptr);
  j["p_over_e0"] = r.p_over_e0 ? rat_to_json(*r.p_over_e0) : Json(nullptr);
  j["log_p_over_e0"] = r.log_p_over_e0 ? Json(*r.log_p_over_e0) : Json(nullptr);
  j["half_kd"] = r.half_kd;
  j["level_ratios"] = to_json(r.level_ratios);
  return j;
}

Json to_json(const ClassSizes& s) {
  Json j{{"cap", s.cap},
         {"p_size", big_to_json(s.p_size)},
         {"e_size", big_to_json(s.e_size)}};
  Json lv = Json::array();
  for (const auto& x : s.levels) lv.push_back(big_to_json(x));
  j["levels"] = lv;
  return j;
}

Json to_json(const McSummary& s) {
  return Json{{"n_samples", s.n_samples},
              {"cap", s.cap},
              {"fraction_in_e", s.fraction_in_e},
              {"fraction_in_e_se", s.fraction_in_e_se},
              {"lambda_mean", s.lambda_mean},
              {"lambda_se", s.lambda_se},
              {"lambda_variance", s.lambda_variance},
              {"bad_loop_rate_mult3", s.bad_loop_rate_mult3},
              {"bad_loop_rate_mult3_se", s.bad_loop_rate_mult3_se},
              {"bad_loop_rate_double2", s.bad_loop_rate_double2},
              {"bad_loop_rate_double2_se", s.bad_loop_rate_double2_se},
              {"multi_edge_pair_rate", s.multi_edge_pair_rate},
              {"multi_edge_pair_rate_se", s.multi_edge_pair_rate_se},
              {"tail_exceed_rate", s.tail_exceed_rate},
              {"tail_exceed_rate_se", s.tail_exceed_rate_se}};
}

Json to_json(const ExhaustiveSummary& s) {
  return Json{{"p_size", big_to_json(s.p_size)},
              {"cap", s.cap},
              {"fraction_in_e", rat_to_json(s.fraction_in_e)},
              {"lambda_mean", rat_to_json(s.lambda_mean)},
              {"multi_edge_pair_rate", rat_to_json(s.multi_edge_pair_rate)},
              {"bad_loop_rate_mult3", rat_to_json(s.bad_loop_rate_mult3)},
              {"bad_loop_rate_double2", rat_to_json(s.bad_loop_rate_double2)},
              {"tail_exceed_rate", rat_to_json(s.tail_exceed_rate)}};
}

Json to_json(const ChiSquareResult& r) {
  return Json{{"classes", r.classes},
              {"n", r.n},
              {"statistic", r.statistic},
              {"df", r.df},
              {"p_value", r.p_value},
              {"observed", r.observed}};
}

Json to_json(const IdentityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"level", row.level},
                        {"sum_f", big_to_json(row.sum_f)},
                        {"sum_b", big_to_json(row.sum_b)},
                        {"equal", row.equal}});
  return Json{{"cap", r.cap}, {"all_equal", r.all_equal}, {"rows", rows}};
}

Json to_json(const BoundsReport& r) {
  return Json{{"cap", r.cap},
              {"perms_scanned", big_to_json(r.perms_scanned)},
              {"f_violations", r.f_violations},
              {"b_violations", r.b_violations},
              {"injectivity_ok", r.injectivity_ok}};
}

Json to_json(const UniformityReport& r) {
  return Json{{"n_classes", r.n_classes},
              {"n_samples", r.n_samples},
              {"delta1", rat_to_json(r.delta1)},
              {"delta1_degenerate", r.delta1_degenerate},
              {"chi_square", to_json(r.chi)},
              {"seed", r.seed},
              {"threshold", r.threshold},
              {"pass", r.pass}};
}

Json to_json(const GenTrace& t) {
  return Json{{"attempts", t.attempts},
              {"initial_lambda", t.initial_lambda},
              {"switch_steps", t.switch_steps},
              {"not_in_e", t.not_in_e},
              {"f_rejections", t.f_rejections},
              {"b_rejections", t.b_rejections},
              {"delta1", rat_to_json(t.delta1_used)},
              {"mode", t.mode == GenMode::Exact ? "exact" : "approx"}};
}

}  // namespace hyperreg

#include "hyperreg/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hyperreg/json_io.hpp"

namespace hyperreg {

namespace {

struct Opts {
  int n = 0, d = 0, k = 0;
  uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "jsonl";
  std::string l_policy = "sqrt";
  std::string mode = "exact";
  long long count = 1;
  long long budget = 1'000'000;
  unsigned precision = 50;
  long long cost_guard = 10'000'000;
  int jobs = 1;
  long long samples = 100'000;
  bool exhaustive = false;
  bool explain = false;
  std::string emit;
  std::string trace;
  std::string perm;
  std::string delta1 = "formula";
};

LPolicy parse_policy(const std::string& s) {
  if (s == "sqrt") return LPolicy::sqrt_nd();
  const std::string prefix = "kd-omega:";
  if (s.rfind(prefix, 0) == 0) return LPolicy::kd_omega(std::stoi(s.substr(prefix.size())));
  throw DomainError("unknown L policy '" + s + "' (use sqrt or kd-omega:<omega>)");
}

CostGuard make_guard(const Opts& o) {
  CostGuard g;
  g.max_perms = o.cost_guard;
  return g;
}

void ensure_seed(Opts& o) {
  if (o.seed_set) return;
  std::random_device rd;
  o.seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  o.seed_set = true;
}

Json metadata(const Opts& o, const std::string& command, const Params& p,
              const LPolicy& pol, bool randomized) {
  Json meta{{"version", kVersion}, {"command", command}};
  meta["params"] = to_json(p);
  meta["l_policy"] = pol.describe();
  meta["L"] = pol.loop_cap(p);
  if (randomized) {
    meta["seed"] = o.seed;
    meta["rng"] = Rng::algorithm_name();
  }
  if (command == "sample") meta["mode"] = o.mode;
  meta["format"] = o.format;
  return Json{{"meta", meta}};
}

void flatten_json(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_json(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten_json(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << " = " << j.dump() << "\n";
  }
}

void emit_report(const Opts& o, const Json& meta, const Json& report, std::ostream& out) {
  if (o.format == "text") {
    flatten_json(meta["meta"], "meta", out);
    flatten_json(report, "", out);
  } else {
    out << meta.dump() << "\n" << report.dump() << "\n";
  }
}

PermSeq parse_perm(const Params& p, const std::string& csv) {
  PermSeq y;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) y.push_back(std::stoi(tok));
  check_perm(p, y);
  return y;
}

GenConfig make_gen_config(const Opts& o, const LPolicy& pol) {
  GenConfig cfg;
  cfg.l_policy = pol;
  cfg.mode = o.mode == "approx" ? GenMode::Approximate : GenMode::Exact;
  cfg.max_attempts = o.budget;
  cfg.guard = make_guard(o);
  if (o.delta1 == "formula")
    cfg.delta1_source = Delta1Source::Formula;
  else if (o.delta1 == "exhaustive")
    cfg.delta1_source = Delta1Source::ExhaustiveOracle;
  else {
    cfg.delta1_source = Delta1Source::Override;
    cfg.delta1_override = BigRat(o.delta1);
  }
  return cfg;
}

int cmd_sample(Opts& o, std::ostream& out) {
  const Params p = Params::create(o.n, o.d, o.k);
  const LPolicy pol = parse_policy(o.l_policy);
  ensure_seed(o);
  GenConfig cfg = make_gen_config(o, pol);
  if (cfg.mode == GenMode::Exact) {
    // resolve once up front; the exhaustive oracle is a full scan
    cfg.delta1_override = resolve_delta1(p, cfg, pol.loop_cap(p));
    cfg.delta1_source = Delta1Source::Override;
  }
  const Json meta = metadata(o, "sample", p, pol, true);

  std::vector<std::string> records(o.count);
  std::vector<Json> traces(o.count);
  auto one = [&](long long i) {
    Rng rng(Rng::child_seed(o.seed, static_cast<uint64_t>(i)));
    GenResult res = cfg.mode == GenMode::Exact ? generate(p, cfg, rng)
                                               : generate_approx(p, cfg, rng);
    records[i] = hypergraph_record(p, res.graph);
    traces[i] = to_json(res.trace);
  };
  if (o.jobs <= 1) {
    for (long long i = 0; i < o.count; ++i) one(i);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<long long> next{0};
    for (int j = 0; j < o.jobs; ++j)
      futs.push_back(std::async(std::launch::async, [&] {
        for (long long i = next++; i < o.count; i = next++) one(i);
      }));
    for (auto& f : futs) f.get();
  }

  if (o.format == "text") {
    flatten_json(meta["meta"], "meta", out);
    for (long long i = 0; i < o.count; ++i) out << "sample[" << i << "] = " << records[i] << "\n";
  } else {
    out << meta.dump() << "\n";
    for (const auto& rec : records) out << rec << "\n";
  }
  if (!o.trace.empty()) {
    std::ofstream tf(o.trace);
    if (!tf) throw DomainError("cannot open trace file '" + o.trace + "'");
    for (const auto& t : traces) tf << t.dump() << "\n";
  }
  return 0;
}

int cmd_enumerate(Opts& o, std::ostream& out) {
  const Params p = Params::create(o.n, o.d, o.k);
  const LPolicy pol = parse_policy(o.l_policy);
  const CostGuard guard = make_guard(o);
  const Json meta = metadata(o, "enumerate", p, pol, false);

  std::vector<std::string> emitted;
  MultigraphSink sink = nullptr;
  if (!o.emit.empty())
    sink = [&](const Multigraph& g) { emitted.push_back(hypergraph_record(p, g)); };
  const BigInt count = brute_force_count(p, guard, sink);

  CountReport report = formula_estimate(p, o.precision);
  report.exact_count = count;
  report.ratio = to_big_float(count, o.precision) / report.estimate;

  if (!o.emit.empty() && o.emit != "-") {
    std::ofstream ef(o.emit);
    if (!ef) throw DomainError("cannot open emit file '" + o.emit + "'");
    for (const auto& rec : emitted) ef << rec << "\n";
  }
  if (o.format == "text") {
    flatten_json(meta["meta"], "meta", out);
    if (o.emit == "-")
      for (const auto& rec : emitted) out << rec << "\n";
    flatten_json(to_json(report), "", out);
  } else {
    out << meta.dump() << "\n";
    if (o.emit == "-")
      for (const auto& rec : emitted) out << rec << "\n";
    out << to_json(report).dump() << "\n";
  }
  return 0;
}

int cmd_formula(Opts& o, std::ostream& out) {
  const Params p = Params::create(o.n, o.d, o.k);
  const LPolicy pol = parse_policy(o.l_policy);
  const Json meta = metadata(o, "formula", p, pol, false);

  Json report;
  try {
    report = to_json(compare(p, pol, make_guard(o), o.precision));
  } catch (const CostGuardError& e) {
    // The closed-form side always works; report it with the oracle skipped.
    report = to_json(formula_estimate(p, o.precision));
    report["oracle_skipped"] = e.what();
  }
  emit_report(o, meta, report, out);
  return 0;
}

int cmd_verify(Opts& o, const std::string& what, std::ostream& out) {
  const Params p = Params::create(o.n, o.d, o.k);
  const LPolicy pol = parse_policy(o.l_policy);
  const CostGuard guard = make_guard(o);
  bool pass = true;
  Json report;
  if (what == "identity") {
    const IdentityReport rep = verify_identity(p, pol, guard);
    report = to_json(rep);
    pass = rep.all_equal;
  } else if (what == "bounds") {
    const BoundsReport rep = verify_bounds(p, pol, guard);
    report = to_json(rep);
    pass = rep.f_violations == 0 && rep.b_violations == 0 && rep.injectivity_ok;
  } else if (what == "ratio") {
    report = to_json(ratio_table(p, pol, guard));
  } else if (what == "uniformity") {
    ensure_seed(o);
    const UniformityReport rep = verify_uniformity(p, pol, o.seed, guard);
    report = to_json(rep);
    pass = rep.pass;
  }
  const Json meta = metadata(o, "verify " + what, p, pol, what == "uniformity");
  emit_report(o, meta, report, out);
  return pass ? 0 : 1;
}

int cmd_stats(Opts& o, const std::string& what, std::ostream& out) {
  const Params p = Params::create(o.n, o.d, o.k);
  const LPolicy pol = parse_policy(o.l_policy);
  const bool randomized = !o.exhaustive;
  if (randomized) ensure_seed(o);
  const Json meta = metadata(o, "stats " + what, p, pol, randomized);

  Json report;
  const ExactExpectations exact = exact_expectations(p);
  report["exact"] = Json{{"e_loop_indicator", rat_to_json(exact.e_loop_indicator)},
                         {"e_lambda", rat_to_json(exact.e_lambda)},
                         {"pair_collision", rat_to_json(exact.pair_collision)},
                         {"asymptote", rat_to_json(exact.asymptote)}};
  if (o.exhaustive) {
    report["exhaustive"] = to_json(exhaustive_summary(p, pol, make_guard(o)));
  } else {
    report["monte_carlo"] = to_json(mc_summary(p, o.samples, pol, o.seed, o.jobs));
  }
  // headline field for the chosen quantity
  if (what == "lambda") report["headline"] = "lambda_mean vs exact e_lambda";
  if (what == "prob-e") report["headline"] = "fraction_in_e";
  if (what == "collision") report["headline"] = "multi_edge_pair_rate vs exact pair_collision";
  if (what == "tail") report["headline"] = "tail_exceed_rate";
  emit_report(o, meta, report, out);
  return 0;
}

int cmd_switch_count(Opts& o, std::ostream& out) {
  const Params p = Params::create(o.n, o.d, o.k);
  const LPolicy pol = parse_policy(o.l_policy);
  const long long cap = pol.loop_cap(p);
  const bool randomized = o.perm.empty();
  if (randomized) ensure_seed(o);

  PermSeq y;
  if (randomized) {
    Rng rng(o.seed);
    y = sample_permutation(p, rng);
  } else {
    y = parse_perm(p, o.perm);
  }

  const Classification c = classify_perm(p, y, pol);
  SwitchView view(p, y);

  Json report;
  report["permutation"] = Json::parse(permutation_record(y));
  report["classification"] = to_json(c);
  report["F"] = nullptr;
  report["F_l"] = nullptr;
  report["B"] = nullptr;
  report["B_const"] = rat_to_json(backward_upper_bound(p));
  if (c.level && *c.level >= 1) {
    report["F"] = view.count_forward();
    report["F_l"] = big_to_json(forward_upper_bound(p, *c.level));
  }
  if (c.level && *c.level + 1 <= cap) report["B"] = view.count_backward(cap);
  if (p.d >= 2) {
    const Delta1 d1 = delta1_formula(p, cap);
    report["delta1_formula"] = rat_to_json(d1.value);
    report["delta1_valid_regime"] = d1.valid_regime;
  }

  const Json meta = metadata(o, "switch-count", p, pol, randomized);
  if (o.format == "text") {
    flatten_json(meta["meta"], "meta", out);
    flatten_json(report, "", out);
  } else {
    out << meta.dump() << "\n" << report.dump() << "\n";
  }
  if (o.explain && c.level) {
    if (*c.level >= 1)
      for (const ForwardOp& op : view.enumerate_forward()) out << to_json(op).dump() << "\n";
    if (*c.level + 1 <= cap)
      for (const BackwardOp& op : view.enumerate_backward(cap))
        out << to_json(op).dump() << "\n";
  }
  return 0;
}

void add_common(CLI::App* cmd, Opts& o, bool randomized) {
  cmd->add_option("-n", o.n, "vertex count")->required();
  cmd->add_option("-d", o.d, "degree")->required();
  cmd->add_option("-k", o.k, "edge size")->required();
  cmd->add_option("--l-policy", o.l_policy, "loop cap policy: sqrt | kd-omega:<omega>");
  cmd->add_option("--format", o.format, "output format: jsonl | text")
      ->check(CLI::IsMember({"jsonl", "text"}));
  cmd->add_option("--cost-guard", o.cost_guard, "max |P| for exhaustive scans");
  if (randomized)
    cmd->add_option("--seed", o.seed, "RNG seed (generated and printed if omitted)")
        ->each([&o](const std::string&) { o.seed_set = true; });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"uniform sampling and exact counting of d-regular k-uniform hypergraphs"};
  app.require_subcommand(1);

  int rc = 0;

  auto* sample = app.add_subcommand("sample", "draw uniform random hypergraphs");
  add_common(sample, o, true);
  sample->add_option("--count", o.count, "number of hypergraphs");
  sample->add_option("--mode", o.mode, "exact | approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  sample->add_option("--budget", o.budget, "restart budget per hypergraph");
  sample->add_option("--delta1", o.delta1, "formula | exhaustive | <num/den override>");
  sample->add_option("--trace", o.trace, "write per-sample generation traces (JSONL)");
  sample->add_option("--jobs", o.jobs, "parallel replicas");
  sample->callback([&] { rc = cmd_sample(o, out); });

  auto* enumerate = app.add_subcommand("enumerate", "exact count by backtracking oracle");
  add_common(enumerate, o, false);
  enumerate->add_option("--emit", o.emit, "stream hypergraphs to a file, or - for stdout");
  enumerate->add_option("--precision", o.precision, "working decimal digits");
  enumerate->callback([&] { rc = cmd_enumerate(o, out); });

  auto* formula = app.add_subcommand("formula", "enumeration-formula report");
  add_common(formula, o, false);
  formula->add_option("--precision", o.precision, "working decimal digits");
  formula->callback([&] { rc = cmd_formula(o, out); });

  auto* verify = app.add_subcommand("verify", "exhaustive verification reports");
  for (const std::string what : {"identity", "ratio", "uniformity", "bounds"}) {
    auto* sub = verify->add_subcommand(what);
    add_common(sub, o, what == "uniformity");
    sub->callback([&, what] { rc = cmd_verify(o, what, out); });
  }
  verify->require_subcommand(1);

  auto* stats = app.add_subcommand("stats", "exact and Monte-Carlo statistics");
  for (const std::string what : {"lambda", "prob-e", "collision", "tail"}) {
    auto* sub = stats->add_subcommand(what);
    add_common(sub, o, true);
    sub->add_option("--samples", o.samples, "Monte-Carlo sample count");
    sub->add_flag("--exhaustive", o.exhaustive, "scan all of P instead of sampling");
    sub->add_option("--jobs", o.jobs, "parallel replicas");
    sub->callback([&, what] { rc = cmd_stats(o, what, out); });
  }
  stats->require_subcommand(1);

  auto* swc = app.add_subcommand("switch-count", "switching counts of one permutation");
  add_common(swc, o, true);
  swc->add_option("--perm", o.perm, "comma-separated permutation instead of sampling");
  swc->add_flag("--explain", o.explain, "list every valid op as a JSON record");
  swc->callback([&] { rc = cmd_switch_count(o, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const CostGuardError& e) {
    err << "cost guard: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace hyperreg

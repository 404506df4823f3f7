#include "c4lab/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "c4lab/m2free.hpp"

namespace c4lab {

namespace {

// Maps to the input-error report and exit 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in vertex list: " + text);
    std::size_t e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad vertex index: " + tok);
    }
  }
  return out;
}

VertexSet parse_vertex_list(const std::string& text) {
  try {
    return VertexSet(parse_int_list(text));
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

std::vector<VertexSet> parse_block_list(const std::string& text) {
  std::vector<VertexSet> out;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) out.push_back(parse_vertex_list(tok));
  return out;
}

Rational parse_rational(const char* name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad --") + name + ": " + e.what());
  }
}

struct Envelope {
  Json config = Json::object();
  std::string outcome;
  std::string error;
  Json certificates = Json::object();
  Json counts = Json::object();
  std::vector<std::pair<std::string, bool>> checks;
  int exit_code = 0;
};

Graph load_graph(const RunConfig& cfg, Envelope& env) {
  if (cfg.input.empty()) throw InputError("--input is required");
  env.config["input"] = cfg.input;
  Graph g = parse_graph_file(cfg.input);
  env.counts["n"] = g.vertex_count();
  env.counts["m"] = g.edge_count();
  return g;
}

std::uint64_t need_seed(const RunConfig& cfg, Envelope& env) {
  if (!cfg.seed) throw InputError("--seed is required for randomized subcommands");
  env.config["seed"] = *cfg.seed;
  return (std::uint64_t)*cfg.seed;
}

Rational need_rational(const std::optional<std::string>& v, const char* name, Envelope& env) {
  if (!v) throw InputError(std::string("--") + name + " is required");
  Rational r = parse_rational(name, *v);
  env.config[name] = r.str();
  return r;
}

ConstantsConfig constants_from(const RunConfig& cfg, Envelope& env) {
  ConstantsConfig cc;
  if (cfg.const_c) cc.c = parse_rational("const-c", *cfg.const_c);
  if (cfg.const_d) {
    Rational d = parse_rational("const-d", *cfg.const_d);
    if (d.den() != 1 || d.num() < 1) throw InputError("--const-d must be a positive integer");
    cc.d = (int)d.num();
  }
  env.config["const_c"] = cc.c.str();
  env.config["const_d"] = cc.d;
  return cc;
}

FamilyDescriptor family_arg(const RunConfig& cfg, Envelope& env) {
  std::string name = cfg.family.empty() ? "c4-only" : cfg.family;
  env.config["family"] = name;
  if (name == "c4-only") return FamilyDescriptor{FamilyKind::C4Only};
  if (name == "chordal-family") return FamilyDescriptor{FamilyKind::ChordalFamily};
  throw InputError("unknown family " + name + " (expected c4-only or chordal-family)");
}

TargetProperty property_arg(const RunConfig& cfg, Envelope& env) {
  std::string name = cfg.family.empty() ? "induced-c4-free" : cfg.family;
  env.config["family"] = name;
  if (name == "induced-c4-free") return TargetProperty::C4Free;
  if (name == "chordal") return TargetProperty::Chordal;
  throw InputError("unknown target " + name + " (expected induced-c4-free or chordal)");
}

bool pair_homog(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long long edges = 0;
  for (int u : a)
    for (int v : b) edges += g.has_edge(u, v) ? 1 : 0;
  return edges == 0 || edges == (long long)a.size() * b.size();
}

long long ipow_capped(long long base, int exp, long long cap) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base > 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// ---- subcommands ------------------------------------------------------------

void op_count_c4(const RunConfig& cfg, Envelope& env) {
  Graph g = load_graph(cfg, env);
  long long c = count_induced_c4(g);
  env.counts["induced_c4"] = c;
  auto w = find_induced_c4(g);
  env.certificates["witness"] =
      w ? Json(std::vector<int>(w->begin(), w->end())) : Json(nullptr);
  env.checks.emplace_back("witness-consistent", w.has_value() == (c > 0));
  env.outcome = "counted";
}

void op_m2_check(const RunConfig& cfg, Envelope& env) {
  Graph g = load_graph(cfg, env);
  if (!cfg.x || !cfg.y) throw InputError("--x and --y are required");
  BipartitePair pr{parse_vertex_list(*cfg.x), parse_vertex_list(*cfg.y)};
  env.config["x"] = json_of(pr.x);
  env.config["y"] = json_of(pr.y);
  if (cfg.r) env.config["r"] = *cfg.r;
  validate_pair(g, pr);
  long long m2 = count_induced_m2(g, pr);
  env.counts["induced_m2"] = m2;
  auto res = nested_order(g, pr);
  if (std::holds_alternative<M2Witness>(res)) {
    const M2Witness& w = std::get<M2Witness>(res);
    env.certificates["witness"] = json_of(w);
    env.checks.emplace_back("witness-verified", verify_m2_witness(g, pr, w));
    env.checks.emplace_back("count-positive", m2 > 0);
    env.outcome = "m2-witness";
    return;
  }
  env.certificates["nested_order"] = json_of(std::get<NestedOrder>(res));
  env.checks.emplace_back("count-zero", m2 == 0);
  if (cfg.r) {
    PairPartition pp = homog_pair_partition(g, pr, *cfg.r);
    env.certificates["partition"] = json_of(pp);
    env.checks.emplace_back("partition-shape", (int)pp.x_blocks.size() == *cfg.r &&
                                                   (int)pp.y_blocks.size() == *cfg.r + 1);
  } else {
    env.certificates["partition"] = Json(nullptr);
  }
  env.outcome = "m2-free";
}

void op_partition(const RunConfig& cfg, Envelope& env) {
  Graph g = load_graph(cfg, env);
  if (!cfg.blocks) throw InputError("--blocks is required");
  CliqueSystem sys;
  sys.cliques = parse_block_list(*cfg.blocks);
  Json bj = Json::array();
  for (const VertexSet& b : sys.cliques) bj.push_back(json_of(b));
  env.config["blocks"] = std::move(bj);
  Rational delta = need_rational(cfg.delta, "delta", env);
  env.config["strong"] = cfg.strong;
  validate_clique_system(g, sys);
  RefinementResult rr = delta_homog_refinement(g, sys, delta);
  env.certificates["refinement"] = json_of(rr);
  env.counts["blocks"] = rr.partition.block_count();
  env.counts["deficiency"] = rr.ledger.deficiency;
  long long n = g.vertex_count();
  HomogeneityLedger fresh = homogeneity_deficiency(g, rr.partition);
  env.checks.emplace_back("deficiency-recomputed", fresh.deficiency == rr.ledger.deficiency);
  env.checks.emplace_back("deficiency-within-delta",
                          Rational(fresh.deficiency) <= delta * Rational(n * n));
  int k = (int)sys.cliques.size();
  bool count_ok;
  try {
    count_ok = Rational(rr.partition.block_count()) <=
               Rational(k) * (Rational(2) / delta).pow((unsigned)k);
  } catch (const std::overflow_error&) {
    count_ok = std::log2((double)std::max(rr.partition.block_count(), 1)) <=
               std::log2((double)std::max(k, 1)) + k * std::log2(2.0 / delta.to_double());
  }
  env.checks.emplace_back("block-count-bound", count_ok);
  if (!cfg.strong) {
    env.certificates["strong"] = Json(nullptr);
    env.outcome = "refined";
    return;
  }
  Rng rng(need_seed(cfg, env));
  StrongPartition sp = strong_homog_partition(g, sys, delta, rng);
  env.certificates["strong"] = json_of(sp);
  env.counts["z_size"] = sp.z.size();
  env.counts["attempts"] = sp.attempts;
  env.checks.emplace_back("strong-z-size", Rational(sp.z.size()) < delta * Rational(n));
  bool homog = true;
  for (std::size_t i = 0; i < sp.w_cores.size(); ++i)
    for (std::size_t j = i + 1; j < sp.w_cores.size(); ++j)
      if (!pair_homog(g, sp.w_cores[i], sp.w_cores[j])) homog = false;
  env.checks.emplace_back("strong-w-homogeneous", homog);
  env.outcome = "strong-partition";
}

void op_decompose(const RunConfig& cfg, Envelope& env) {
  Graph g = load_graph(cfg, env);
  Rational alpha = need_rational(cfg.alpha, "alpha", env);
  Rational gamma = need_rational(cfg.gamma, "gamma", env);
  CondRegConfig cc;
  cc.constants = constants_from(cfg, env);
  if (cfg.exact_cap) cc.m2_exact_cap = *cfg.exact_cap;
  env.config["exact_cap"] = cc.m2_exact_cap;
  Rng rng(need_seed(cfg, env));
  CondRegResult res = conditional_regularity(g, alpha, gamma, rng, cc);
  env.certificates["result"] = json_of(res);
  switch (res.kind) {
    case CondRegResult::Kind::Structure:
      env.counts["edits_total"] = res.report->edits_total.size();
      env.counts["edits_inside_x"] = res.report->edits_inside_x.size();
      env.counts["z_size"] = res.report->z.size();
      env.checks.emplace_back("structure-clauses", verify_structure_report(g, *res.report).empty());
      env.outcome = "structure";
      break;
    case CondRegResult::Kind::C4Rich:
      env.counts["residual_c4"] = res.residual_c4;
      env.checks.emplace_back("residual-c4-positive", res.residual_c4 > 0);
      env.outcome = "c4-rich";
      break;
    case CondRegResult::Kind::StageFailure:
      env.outcome = "stage-failure";
      env.exit_code = 2;
      break;
  }
}

void op_edit_indset(const RunConfig& cfg, Envelope& env) {
  Graph g = load_graph(cfg, env);
  if (!cfg.x || !cfg.y) throw InputError("--x and --y are required");
  VertexSet x = parse_vertex_list(*cfg.x);
  VertexSet y = parse_vertex_list(*cfg.y);
  env.config["x"] = json_of(x);
  env.config["y"] = json_of(y);
  FamilyDescriptor fam = family_arg(cfg, env);
  std::optional<Rng> rng;
  if (cfg.seed) rng.emplace(need_seed(cfg, env));
  IndsetEditResult r = indset_edit(g, x, y, fam, rng ? &*rng : nullptr);
  C4LowerBoundCertificate cert = c4_lower_bound_certificate(g, x, y);
  env.certificates["edit"] = json_of(r);
  env.certificates["lower_bound"] = json_of(cert);
  env.counts["edits"] = r.edits.size();
  env.counts["certified_c4"] = cert.certified_count;
  env.checks.emplace_back("edited-recognizer-free", fam.is_free(r.edited));
  env.checks.emplace_back("certificate-jensen-ordering",
                          Rational(cert.certified_count) >= cert.jensen_bound);
  env.outcome = "edited-free";
}

void op_farness(const RunConfig& cfg, Envelope& env) {
  Graph g = load_graph(cfg, env);
  TargetProperty prop = property_arg(cfg, env);
  int cap = cfg.exact_cap.value_or(8);
  if (cap < 0) throw InputError("--exact-cap must be nonnegative");
  env.config["exact_cap"] = cap;
  FarnessCertificate c = farness_certificate(g, prop, cap);
  env.certificates["farness"] = json_of(c);
  env.counts["lower"] = c.lower;
  env.counts["exact"] = c.exact ? Json(*c.exact) : Json(nullptr);
  env.counts["upper"] = c.upper;
  env.checks.emplace_back("sandwich-ordering",
                          c.lower <= c.upper &&
                              (!c.exact || (c.lower <= *c.exact && *c.exact <= c.upper)));
  env.checks.emplace_back("upper-verified",
                          satisfies_property(apply_edits(g, c.upper_result.edits), prop));
  env.outcome = c.exact ? "exact" : "bounded";
}

void op_lowerbound(const RunConfig& cfg, Envelope& env) {
  if (!cfg.k || !cfg.f) throw InputError("--k and --f are required");
  BlowupSpec spec{*cfg.k, *cfg.f};
  env.config["k"] = spec.k;
  env.config["f"] = spec.f;
  Blowup b = blowup_cycle(spec);
  env.counts["n"] = b.graph.vertex_count();
  env.counts["edges"] = b.graph.edge_count();
  env.certificates["epsilon"] = blowup_epsilon(spec.k).str();
  bool all_ok = true;
  env.checks.emplace_back("edge-count-formula", b.graph.edge_count() == blowup_edge_count(spec));
  if (spec.k >= 5) {
    ExactCaps caps{std::max(8, spec.k - 1), 128};
    ShortCycleScan scan = verify_no_short_induced_cycles(b, caps);
    env.certificates["short_cycles"] = json_of(scan);
    env.checks.emplace_back("no-short-induced-cycles", scan.clean);
    all_ok = all_ok && scan.clean;
  } else {
    env.certificates["short_cycles"] = Json(nullptr);
  }
  long long tuples = ipow_capped(spec.f, spec.k, 4'000'000'000'000'000'000LL);
  long long n = b.graph.vertex_count();
  if (tuples <= 2'000'000) {
    TransversalHypergraph h = transversal_cycle_hypergraph(b.graph, b.parts);
    env.counts["transversals"] = (long long)h.edges.size();
    bool formula = (long long)h.edges.size() == tuples;
    env.checks.emplace_back("transversal-count-formula", formula);
    all_ok = all_ok && formula;
    if (n * (n - 1) / 2 * tuples <= 5'000'000) {
      DestructionScan d = exhaustive_single_edit_destruction(b);
      env.certificates["destruction"] = json_of(d);
      env.checks.emplace_back("destruction-within-bound", d.within_bound);
      all_ok = all_ok && d.within_bound;
    } else {
      env.certificates["destruction"] = Json(nullptr);
    }
  } else {
    env.certificates["destruction"] = Json(nullptr);
  }
  if (cfg.edits) {
    int trials = cfg.trials.value_or(100);
    env.config["edits"] = *cfg.edits;
    env.config["trials"] = trials;
    Rng rng(need_seed(cfg, env));
    ResilienceResult rr = edit_resilience_check(spec, *cfg.edits, rng, trials);
    env.certificates["resilience"] = json_of(rr);
    env.checks.emplace_back("resilience-floor-held", rr.ok);
    all_ok = all_ok && rr.ok;
  } else {
    env.certificates["resilience"] = Json(nullptr);
  }
  env.outcome = all_ok ? "verified" : "violated";
  env.exit_code = all_ok ? 0 : 2;
}

void op_pipeline(const RunConfig& cfg, Envelope& env) {
  Graph g = load_graph(cfg, env);
  PipelineConfig pc;
  pc.epsilon = need_rational(cfg.epsilon, "epsilon", env);
  if (cfg.alpha) pc.alpha_override = parse_rational("alpha", *cfg.alpha);
  if (cfg.gamma) pc.gamma_override = parse_rational("gamma", *cfg.gamma);
  pc.constants = constants_from(cfg, env);
  if (cfg.exact_cap) pc.m2_exact_cap = *cfg.exact_cap;
  env.config["exact_cap"] = pc.m2_exact_cap;
  Rng rng(need_seed(cfg, env));
  PipelineReport rep =
      cfg.op == "pipeline-c4" ? c4_pipeline(g, pc, rng) : chordal_pipeline(g, pc, rng);
  env.config["alpha"] = rep.alpha.str();
  env.config["gamma"] = rep.gamma.str();
  env.checks = rep.invariant_checks;
  Json pj = json_of(rep);
  pj.erase("invariant_checks");
  env.certificates = std::move(pj);
  if (rep.structure) env.counts["homogenize_edits"] = rep.structure->edits_total.size();
  switch (rep.outcome.kind) {
    case PipelineOutcome::Kind::AlreadyFree:
      env.outcome = "already-free";
      break;
    case PipelineOutcome::Kind::C4Rich:
      env.counts["residual_c4"] = rep.outcome.residual_c4;
      env.outcome = "c4-rich";
      break;
    case PipelineOutcome::Kind::CycleReplication:
      env.counts["cycle_length"] = (long long)rep.outcome.replication->cycle.size();
      env.counts["copies"] = rep.outcome.replication->copies;
      env.outcome = "cycle-replication";
      break;
    case PipelineOutcome::Kind::IndsetEdit:
      env.counts["edits"] = rep.outcome.edit->edits.size();
      env.counts["certified_c4"] = rep.outcome.certificate->certified_count;
      env.outcome = "indset-edit";
      break;
    case PipelineOutcome::Kind::StageFailure:
      env.outcome = "stage-failure";
      env.exit_code = 2;
      break;
  }
}

void op_report_audit(const RunConfig& cfg, Envelope& env) {
  if (cfg.input.empty()) throw InputError("--input is required");
  env.config["input"] = cfg.input;
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw InputError("cannot open " + cfg.input);
  Json rep = Json::parse(in);
  AuditResult ar = audit_report(rep);
  env.checks = ar.checks;
  long long failed = 0;
  for (const auto& [name, passed] : ar.checks) failed += passed ? 0 : 1;
  env.counts["checks"] = (long long)ar.checks.size();
  env.counts["failed"] = failed;
  env.outcome = ar.ok ? "audit-passed" : "audit-failed";
  env.exit_code = ar.ok ? 0 : 2;
}

void op_gen(const RunConfig& cfg, Envelope& env) {
  env.config["model"] = cfg.model;
  if (cfg.out.empty()) throw InputError("--out is required for gen");
  Graph g;
  if (cfg.model == "gnp" || cfg.model == "split") {
    if (!cfg.n) throw InputError("--n is required");
    if (*cfg.n < 0) throw InputError("--n must be nonnegative");
    env.config["n"] = *cfg.n;
    Rational p = need_rational(cfg.p, "p", env);
    Rng rng(need_seed(cfg, env));
    g = generate_graph(cfg.model, *cfg.n, p, 0, 0, rng);
  } else if (cfg.model == "blowup") {
    if (!cfg.k || !cfg.f) throw InputError("--k and --f are required");
    env.config["k"] = *cfg.k;
    env.config["f"] = *cfg.f;
    Rng rng(0);
    g = generate_graph(cfg.model, 0, Rational(1, 2), *cfg.k, *cfg.f, rng);
  } else {
    throw InputError("unknown model " + cfg.model + " (expected gnp, split, or blowup)");
  }
  env.config["out"] = cfg.out;
  write_file_atomic(cfg.out, serialize_graph(g));
  env.counts["n"] = g.vertex_count();
  env.counts["m"] = g.edge_count();
  env.outcome = "generated";
}

void dispatch(const RunConfig& cfg, Envelope& env) {
  if (cfg.format != "json" && cfg.format != "text")
    throw InputError("unknown --format " + cfg.format + " (expected json or text)");
  if (cfg.op == "count-c4") op_count_c4(cfg, env);
  else if (cfg.op == "m2-check") op_m2_check(cfg, env);
  else if (cfg.op == "partition") op_partition(cfg, env);
  else if (cfg.op == "decompose") op_decompose(cfg, env);
  else if (cfg.op == "edit-indset") op_edit_indset(cfg, env);
  else if (cfg.op == "farness") op_farness(cfg, env);
  else if (cfg.op == "lowerbound") op_lowerbound(cfg, env);
  else if (cfg.op == "pipeline-c4" || cfg.op == "pipeline-chordal") op_pipeline(cfg, env);
  else if (cfg.op == "report-audit") op_report_audit(cfg, env);
  else if (cfg.op == "gen") op_gen(cfg, env);
  else throw InputError("unknown subcommand: " + cfg.op);
}

void fail(Envelope& env, const std::string& msg) {
  env.outcome = "input-error";
  env.error = msg;
  env.exit_code = 1;
}

}  // namespace

RunOutput run(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Envelope env;
  env.config["op"] = cfg.op;
  try {
    dispatch(cfg, env);
  } catch (const InputError& e) {
    fail(env, e.what());
  } catch (const Json::exception& e) {
    fail(env, std::string("bad report json: ") + e.what());
  } catch (const RetriesExhaustedError& e) {
    env.outcome = "retries-exhausted";
    env.certificates["transcript"] = e.transcript;
    env.exit_code = 2;
  } catch (const BoundViolation& e) {
    // A guaranteed bound failed on this input; surfaced, never swallowed.
    env.outcome = "bound-violation";
    env.certificates["violation"] = std::string(e.what());
    env.exit_code = 2;
  } catch (const ParseError& e) {
    fail(env, e.what());
  } catch (const PreconditionError& e) {
    std::string msg = e.what();
    if (!e.witness.empty()) {
      msg += " (witness:";
      for (int v : e.witness) msg += " " + std::to_string(v);
      msg += ")";
    }
    fail(env, msg);
  } catch (const BudgetError& e) {
    fail(env, e.what());
  } catch (const std::overflow_error& e) {
    fail(env, std::string("rational overflow: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(env, e.what());
  } catch (const std::out_of_range& e) {
    fail(env, e.what());
  } catch (const std::runtime_error& e) {
    fail(env, e.what());
  }
  // logic_error escapes on purpose: an internal invariant break should crash.
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  Json rep;
  rep["schema"] = 1;
  rep["config"] = env.config;
  rep["outcome"] = env.outcome;
  if (!env.error.empty()) rep["error"] = env.error;
  rep["certificates"] = env.certificates;
  rep["counts"] = env.counts;
  rep["invariant_checks"] = json_of(env.checks);
  rep["timing_ms"] = (long long)ms;
  return RunOutput{std::move(rep), env.exit_code};
}

std::string render_report(const Json& report, const std::string& format) {
  if (format != "text") return report.dump(2) + "\n";
  std::ostringstream out;
  out << report.at("config").at("op").get<std::string>() << ": "
      << report.at("outcome").get<std::string>() << "\n";
  if (report.contains("error"))
    out << "  error: " << report.at("error").get<std::string>() << "\n";
  for (const auto& [key, val] : report.at("counts").items())
    out << "  " << key << " = " << val.dump() << "\n";
  for (const Json& c : report.at("invariant_checks"))
    out << "  [" << (c.at("passed").get<bool>() ? "pass" : "FAIL") << "] "
        << c.at("name").get<std::string>() << "\n";
  out << "  timing_ms = " << report.at("timing_ms").dump() << "\n";
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp(path + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

Graph generate_graph(const std::string& model, int n, const Rational& p, int k, int f, Rng& rng) {
  if (model == "gnp") return random_graph(n, p, rng);
  if (model == "split") {
    Graph g(n);
    int c = (n + 1) / 2;
    for (int u = 0; u < c; ++u)
      for (int v = u + 1; v < c; ++v) g.add_edge(u, v);
    for (int u = 0; u < c; ++u)
      for (int v = c; v < n; ++v)
        if (rng.chance(p)) g.add_edge(u, v);
    return g;
  }
  if (model == "blowup") return blowup_cycle(BlowupSpec{k, f}).graph;
  throw PreconditionError("unknown model: " + model);
}

}  // namespace c4lab

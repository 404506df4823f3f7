#include "c4lab/chordal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <variant>

namespace c4lab {

CycleBoundLedger cycle_length_bound(const StructureReport& sr) {
  CycleBoundLedger out;
  out.k = (int)sr.x_blocks.size();
  out.l_max = 2 * out.k;
  out.alpha = sr.alpha;
  bool ok;
  try {
    ok = Rational(out.l_max) * sr.alpha.pow(3) <= Rational(20);
  } catch (const std::overflow_error&) {
    ok = std::log2((double)std::max(out.l_max, 1)) + 3 * std::log2(sr.alpha.to_double()) <=
         std::log2(20.0);
  }
  check_bound(ok, "2k exceeded 20*alpha^-3");
  return out;
}

namespace {

double gamma_formula_log2_for(TargetProperty prop, const Rational& eps, const Rational& alpha) {
  double a = alpha.to_double();
  double e = eps.to_double();
  double base = std::log2(a / 20.0);
  if (prop == TargetProperty::C4Free)
    return -1.0 + 16000.0 * std::pow(a, -6.0) * base + 4.0 * (std::log2(e) - 1.0);
  return -1.0 + 1e5 * std::pow(a, -9.0) * base + 20.0 * std::pow(a, -3.0) * (std::log2(e) - 1.0);
}

struct ReplicationFailure {
  std::string reason;
};

// Draws `samples` transversal tuples from the w cores along the cycle's
// blocks and verifies each induces the cycle in g_prime. Blocks repeat only
// for consecutive cycle positions, which then need two distinct w vertices.
std::variant<ReplicationCheck, ReplicationFailure> replicate_cycle(
    const Graph& g_prime, const StructureReport& sr, const std::vector<int>& cycle, int samples,
    Rng& rng) {
  ReplicationCheck out;
  out.cycle = cycle;
  for (int v : cycle) {
    int b = sr.strong.q_blocks.block_of(v);
    detail::require(b >= 0, "cycle vertex outside the q blocks");
    out.blocks.push_back(b);
  }
  std::map<int, std::vector<int>> positions;  // block -> cycle positions
  for (std::size_t s = 0; s < out.blocks.size(); ++s)
    positions[out.blocks[(std::size_t)s]].push_back((int)s);

  out.copies_exact = true;
  out.copies = 1;
  out.copies_log2 = 0;
  for (auto& [b, pos] : positions) {
    const VertexSet& w = sr.strong.w_cores[(std::size_t)b];
    if (pos.size() > 2) return ReplicationFailure{"a block holds three cycle vertices"};
    if (w.size() < (int)pos.size())
      return ReplicationFailure{"w core " + std::to_string(b) + " has " +
                                std::to_string(w.size()) + " vertices but the cycle needs " +
                                std::to_string(pos.size())};
    long long ways = pos.size() == 2 ? (long long)w.size() * (w.size() - 1) : w.size();
    out.copies_log2 += std::log2((double)ways);
    if (out.copies_exact) {
      __int128 next = (__int128)out.copies * ways;
      if (next > (__int128)4e18) {
        out.copies_exact = false;
        out.copies = 0;
      } else {
        out.copies = (long long)next;
      }
    }
  }

  std::vector<int> tuple(cycle.size());
  for (int t = 0; t < samples; ++t) {
    for (auto& [b, pos] : positions) {
      const VertexSet& w = sr.strong.w_cores[(std::size_t)b];
      std::vector<int> draw = rng.sample_without_replacement(w.size(), (int)pos.size());
      for (std::size_t i = 0; i < pos.size(); ++i)
        tuple[(std::size_t)pos[(std::size_t)i]] = w[draw[(std::size_t)i]];
    }
    if (!induces_cycle(g_prime, tuple))
      return ReplicationFailure{"sampled tuple does not induce the cycle in g-prime"};
    ++out.samples_verified;
  }
  return out;
}

PipelineReport run_pipeline(const Graph& g, TargetProperty prop, const PipelineConfig& cfg,
                            Rng& rng) {
  if (!(Rational(0) < cfg.epsilon && cfg.epsilon < Rational(1, 2)))
    throw PreconditionError("epsilon must lie in (0, 1/2)");

  PipelineReport rep;
  rep.property = prop;
  rep.epsilon = cfg.epsilon;
  rep.alpha = cfg.alpha_override ? *cfg.alpha_override
                                 : cfg.epsilon.pow(6) / Rational(2048);
  rep.gamma = cfg.gamma_override ? *cfg.gamma_override : Rational(1, 4);
  rep.gamma_formula_log2 = gamma_formula_log2_for(prop, cfg.epsilon, rep.alpha);
  auto note = [&](const std::string& name, bool passed) {
    rep.invariant_checks.emplace_back(name, passed);
  };

  if (satisfies_property(g, prop)) {
    rep.outcome.kind = PipelineOutcome::Kind::AlreadyFree;
    note("input-recognizer", true);
    return rep;
  }

  CondRegConfig ccfg;
  ccfg.constants = cfg.constants;
  ccfg.dense_policy = cfg.dense_policy;
  ccfg.strong = cfg.strong;
  ccfg.m2_exact_cap = cfg.m2_exact_cap;
  CondRegResult cond = conditional_regularity(g, rep.alpha, rep.gamma, rng, ccfg);

  if (cond.kind == CondRegResult::Kind::C4Rich) {
    rep.outcome.kind = PipelineOutcome::Kind::C4Rich;
    rep.outcome.residual = cond.residual;
    rep.outcome.residual_c4 = cond.residual_c4;
    note("residual-c4-count-positive", cond.residual_c4 > 0);
    return rep;
  }
  if (cond.kind == CondRegResult::Kind::StageFailure) {
    rep.outcome.kind = PipelineOutcome::Kind::StageFailure;
    rep.outcome.failure_stage = cond.failure_stage;
    rep.outcome.failure_reason = cond.failure_reason;
    return rep;
  }

  StructureReport& sr = *cond.report;
  note("structure-clauses", verify_structure_report(g, sr).empty());

  Graph g2 = homogenize_on_w(sr.g_prime, sr);
  note("homogenize-within-deficiency", true);  // asserted inside the call
  note("homogenize-idempotent", homogenize_on_w(g2, sr) == g2);

  VertexSet x_all;
  for (const VertexSet& xb : sr.x_blocks) x_all = x_all.unite(xb);
  VertexSet x_rest = x_all.minus(sr.z);
  long long n = g.vertex_count();
  // Far inputs keep at least (eps/2)n vertices in x minus z; recorded, not
  // gated, because desk-scale inputs need not be far.
  note("x-rest-at-least-half-eps-n",
       Rational(2 * x_rest.size()) >= cfg.epsilon * Rational(n));

  Graph sub = induced_subgraph(g2, x_rest);
  auto witness = find_property_witness(sub, prop);

  if (witness) {
    std::vector<int> cycle;
    for (int v : *witness) cycle.push_back(x_rest[v]);
    if (prop == TargetProperty::Chordal) {
      CycleBoundLedger ledger = cycle_length_bound(sr);
      check_bound((int)cycle.size() <= ledger.l_max, "found cycle longer than 2k");
      note("cycle-length-within-2k", true);
      rep.outcome.cycle_bound = ledger;
    }
    auto rc = replicate_cycle(sr.g_prime, sr, cycle, cfg.replication_samples, rng);
    if (std::holds_alternative<ReplicationFailure>(rc)) {
      rep.outcome.kind = PipelineOutcome::Kind::StageFailure;
      rep.outcome.failure_stage = "replication";
      rep.outcome.failure_reason = std::get<ReplicationFailure>(rc).reason;
      rep.structure = std::move(sr);
      return rep;
    }
    rep.outcome.kind = PipelineOutcome::Kind::CycleReplication;
    rep.outcome.replication = std::get<ReplicationCheck>(rc);
    note("replication-samples-verified", true);
    rep.structure = std::move(sr);
    return rep;
  }

  // x side clean, z isolated: the editing lemma applies to the whole graph.
  FamilyDescriptor fam{prop == TargetProperty::C4Free ? FamilyKind::C4Only
                                                      : FamilyKind::ChordalFamily};
  IndsetEditResult edit = indset_edit(g2, x_all, sr.y, fam);
  note("indset-edit-recognizer", true);  // asserted inside the call
  C4LowerBoundCertificate cert = c4_lower_bound_certificate(g2, x_all, sr.y);
  note("certificate-jensen-ordering", true);  // asserted inside the call
  rep.outcome.kind = PipelineOutcome::Kind::IndsetEdit;
  rep.outcome.edit = std::move(edit);
  rep.outcome.certificate = cert;
  rep.structure = std::move(sr);
  return rep;
}

}  // namespace

PipelineReport c4_pipeline(const Graph& g, const PipelineConfig& cfg, Rng& rng) {
  return run_pipeline(g, TargetProperty::C4Free, cfg, rng);
}

PipelineReport chordal_pipeline(const Graph& g, const PipelineConfig& cfg, Rng& rng) {
  return run_pipeline(g, TargetProperty::Chordal, cfg, rng);
}

}  // namespace c4lab

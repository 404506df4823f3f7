#include "c4lab/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "c4lab/cli.hpp"
#include "c4lab/m2free.hpp"

namespace c4lab {

// ---- struct -> json ---------------------------------------------------------

Json json_of(const Rational& r) { return Json(r.str()); }

Json json_of(const VertexSet& s) { return Json(s.members()); }

Json json_of(const EditSet& e) {
  Json j = Json::array();
  for (const Edit& ed : e) {
    Json one;
    one["op"] = ed.kind == EditKind::Add ? "add" : "delete";
    one["u"] = ed.u;
    one["v"] = ed.v;
    j.push_back(std::move(one));
  }
  return j;
}

Json json_of(const M2Witness& w) {
  Json j;
  j["x1"] = w.x1;
  j["y1"] = w.y1;
  j["x2"] = w.x2;
  j["y2"] = w.y2;
  return j;
}

Json json_of(const NestedOrder& o) {
  Json j;
  j["order"] = o.order;
  return j;
}

namespace {

Json blocks_json(const std::vector<VertexSet>& blocks) {
  Json j = Json::array();
  for (const VertexSet& b : blocks) j.push_back(json_of(b));
  return j;
}

}  // namespace

Json json_of(const PairPartition& p) {
  Json j;
  j["x_blocks"] = blocks_json(p.x_blocks);
  j["y_blocks"] = blocks_json(p.y_blocks);
  return j;
}

Json json_of(const Partition& p) {
  Json j;
  j["ground"] = json_of(p.ground);
  j["blocks"] = blocks_json(p.blocks);
  return j;
}

Json json_of(const HomogeneityLedger& l) {
  Json pairs = Json::array();
  for (auto [a, b] : l.non_homog_pairs) pairs.push_back(Json::array({a, b}));
  Json j;
  j["non_homog_pairs"] = std::move(pairs);
  j["deficiency"] = l.deficiency;
  return j;
}

Json json_of(const RefinementResult& r) {
  Json j;
  j["partition"] = json_of(r.partition);
  j["ledger"] = json_of(r.ledger);
  j["r"] = r.r;
  return j;
}

Json json_of(const StrongPartition& sp) {
  Json j;
  j["z"] = json_of(sp.z);
  j["q_blocks"] = json_of(sp.q_blocks);
  j["w_cores"] = blocks_json(sp.w_cores);
  j["attempts"] = sp.attempts;
  j["coarse_blocks"] = sp.coarse_blocks;
  j["fine_blocks"] = sp.fine_blocks;
  j["refined_product_cap"] = sp.refined_product_cap;
  j["w_size_bound_log2"] = sp.w_size_bound_log2;
  return j;
}

Json json_of(const M2EditRecord& r) {
  Json j;
  j["i"] = r.i;
  j["j"] = r.j;
  j["exact"] = r.exact;
  j["edits"] = r.edits;
  return j;
}

Json json_of(const StructureReport& sr) {
  Json j;
  j["x_blocks"] = blocks_json(sr.x_blocks);
  j["y"] = json_of(sr.y);
  j["z"] = json_of(sr.z);
  j["strong"] = json_of(sr.strong);
  j["edits_total"] = json_of(sr.edits_total);
  j["edits_inside_x"] = json_of(sr.edits_inside_x);
  j["alpha"] = json_of(sr.alpha);
  j["gamma"] = json_of(sr.gamma);
  Json recs = Json::array();
  for (const M2EditRecord& r : sr.m2_records) recs.push_back(json_of(r));
  j["m2_records"] = std::move(recs);
  j["w_size_bound_log2"] = sr.w_size_bound_log2;
  return j;
}

Json json_of(const CondRegResult& r) {
  Json j;
  switch (r.kind) {
    case CondRegResult::Kind::Structure:
      j["kind"] = "structure";
      j["report"] = json_of(*r.report);
      break;
    case CondRegResult::Kind::C4Rich:
      j["kind"] = "c4-rich";
      j["residual"] = json_of(r.residual);
      j["residual_c4"] = r.residual_c4;
      break;
    case CondRegResult::Kind::StageFailure:
      j["kind"] = "stage-failure";
      j["failure_stage"] = r.failure_stage;
      j["failure_reason"] = r.failure_reason;
      break;
  }
  return j;
}

Json json_of(const AntiMatching& am) {
  Json pairs = Json::array();
  for (auto [u, v] : am.pairs) pairs.push_back(Json::array({u, v}));
  Json j;
  j["owner"] = am.owner;
  j["pairs"] = std::move(pairs);
  return j;
}

Json json_of(const IndsetEditResult& r) {
  Json ams = Json::array();
  for (const AntiMatching& am : r.antimatchings) ams.push_back(json_of(am));
  Json j;
  j["edits"] = json_of(r.edits);
  j["antimatchings"] = std::move(ams);
  return j;
}

Json json_of(const C4LowerBoundCertificate& c) {
  Json j;
  j["certified_count"] = c.certified_count;
  j["t_sum"] = c.t_sum;
  j["jensen_bound"] = json_of(c.jensen_bound);
  return j;
}

Json json_of(const PackingResult& p) {
  Json j;
  j["count"] = p.count;
  j["witnesses"] = p.witnesses;
  return j;
}

Json json_of(const ExactDistanceResult& r) {
  Json j;
  j["distance"] = r.distance;
  j["edits"] = json_of(r.edits);
  return j;
}

Json json_of(const UpperBoundResult& r) {
  Json j;
  j["count"] = r.count;
  j["edits"] = json_of(r.edits);
  j["strategy"] = r.strategy;
  return j;
}

Json json_of(const FarnessCertificate& c) {
  Json j;
  j["lower"] = c.lower;
  j["exact"] = c.exact ? Json(*c.exact) : Json(nullptr);
  j["upper"] = c.upper;
  j["packing"] = json_of(c.packing);
  j["exact_result"] = c.exact_result ? json_of(*c.exact_result) : Json(nullptr);
  j["upper_result"] = json_of(c.upper_result);
  return j;
}

Json json_of(const BlowupSpec& s) {
  Json j;
  j["k"] = s.k;
  j["f"] = s.f;
  return j;
}

Json json_of(const ShortCycleScan& s) {
  Json j;
  j["clean"] = s.clean;
  j["length"] = s.length;
  j["cycle"] = s.cycle ? Json(*s.cycle) : Json(nullptr);
  return j;
}

Json json_of(const DestructionScan& s) {
  Json j;
  j["base"] = s.base;
  j["per_edit_bound"] = s.per_edit_bound;
  j["worst_destroyed"] = s.worst_destroyed;
  j["within_bound"] = s.within_bound;
  j["worst_pair"] =
      s.worst_pair ? Json(Json::array({s.worst_pair->first, s.worst_pair->second})) : Json(nullptr);
  return j;
}

Json json_of(const ResilienceResult& r) {
  Json j;
  j["ok"] = r.ok;
  j["base"] = r.base;
  j["floor"] = r.floor;
  j["worst"] = r.worst;
  j["trials"] = r.trials;
  j["violating"] = r.violating ? json_of(*r.violating) : Json(nullptr);
  return j;
}

Json json_of(const CycleBoundLedger& l) {
  Json j;
  j["k"] = l.k;
  j["l_max"] = l.l_max;
  j["alpha"] = json_of(l.alpha);
  return j;
}

Json json_of(const ReplicationCheck& r) {
  Json j;
  j["cycle"] = r.cycle;
  j["blocks"] = r.blocks;
  j["samples_verified"] = r.samples_verified;
  j["copies"] = r.copies;
  j["copies_exact"] = r.copies_exact;
  j["copies_log2"] = r.copies_log2;
  return j;
}

Json json_of(const PipelineOutcome& o) {
  Json j;
  switch (o.kind) {
    case PipelineOutcome::Kind::AlreadyFree:
      j["kind"] = "already-free";
      break;
    case PipelineOutcome::Kind::C4Rich:
      j["kind"] = "c4-rich";
      j["residual"] = json_of(o.residual);
      j["residual_c4"] = o.residual_c4;
      break;
    case PipelineOutcome::Kind::CycleReplication:
      j["kind"] = "cycle-replication";
      j["cycle_bound"] = o.cycle_bound ? json_of(*o.cycle_bound) : Json(nullptr);
      j["replication"] = json_of(*o.replication);
      break;
    case PipelineOutcome::Kind::IndsetEdit:
      j["kind"] = "indset-edit";
      j["edit"] = json_of(*o.edit);
      j["certificate"] = json_of(*o.certificate);
      break;
    case PipelineOutcome::Kind::StageFailure:
      j["kind"] = "stage-failure";
      j["failure_stage"] = o.failure_stage;
      j["failure_reason"] = o.failure_reason;
      break;
  }
  return j;
}

Json json_of(const PipelineReport& r) {
  Json j;
  j["property"] = target_property_name(r.property);
  j["epsilon"] = json_of(r.epsilon);
  j["alpha"] = json_of(r.alpha);
  j["gamma"] = json_of(r.gamma);
  j["gamma_formula_log2"] = r.gamma_formula_log2;
  j["structure"] = r.structure ? json_of(*r.structure) : Json(nullptr);
  j["outcome"] = json_of(r.outcome);
  j["invariant_checks"] = json_of(r.invariant_checks);
  return j;
}

Json json_of(const std::vector<std::pair<std::string, bool>>& checks) {
  Json j = Json::array();
  for (const auto& [name, passed] : checks) {
    Json one;
    one["name"] = name;
    one["passed"] = passed;
    j.push_back(std::move(one));
  }
  return j;
}

// ---- json -> struct ---------------------------------------------------------

Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

VertexSet vertexset_from_json(const Json& j) { return VertexSet(j.get<std::vector<int>>()); }

EditSet editset_from_json(const Json& j) {
  EditSet out;
  for (const Json& one : j) {
    std::string op = one.at("op").get<std::string>();
    if (op != "add" && op != "delete") throw PreconditionError("unknown edit op: " + op);
    out.add(one.at("u").get<int>(), one.at("v").get<int>(),
            op == "add" ? EditKind::Add : EditKind::Delete);
  }
  return out;
}

namespace {

std::vector<VertexSet> blocks_from_json(const Json& j) {
  std::vector<VertexSet> out;
  for (const Json& b : j) out.push_back(vertexset_from_json(b));
  return out;
}

}  // namespace

Partition partition_from_json(const Json& j) {
  return Partition::create(vertexset_from_json(j.at("ground")), blocks_from_json(j.at("blocks")));
}

StrongPartition strong_from_json(const Json& j) {
  StrongPartition sp;
  sp.z = vertexset_from_json(j.at("z"));
  sp.q_blocks = partition_from_json(j.at("q_blocks"));
  sp.w_cores = blocks_from_json(j.at("w_cores"));
  sp.attempts = j.at("attempts").get<int>();
  sp.coarse_blocks = j.at("coarse_blocks").get<int>();
  sp.fine_blocks = j.at("fine_blocks").get<int>();
  sp.refined_product_cap = j.at("refined_product_cap").get<int>();
  sp.w_size_bound_log2 = j.at("w_size_bound_log2").get<double>();
  return sp;
}

StructureReport structure_from_json(const Json& j, const Graph& g) {
  StructureReport sr;
  sr.x_blocks = blocks_from_json(j.at("x_blocks"));
  sr.y = vertexset_from_json(j.at("y"));
  sr.z = vertexset_from_json(j.at("z"));
  sr.strong = strong_from_json(j.at("strong"));
  sr.edits_total = editset_from_json(j.at("edits_total"));
  sr.edits_inside_x = editset_from_json(j.at("edits_inside_x"));
  sr.alpha = rational_from_json(j.at("alpha"));
  sr.gamma = rational_from_json(j.at("gamma"));
  for (const Json& r : j.at("m2_records")) {
    sr.m2_records.push_back(M2EditRecord{r.at("i").get<int>(), r.at("j").get<int>(),
                                         r.at("exact").get<bool>(), r.at("edits").get<int>()});
  }
  sr.w_size_bound_log2 = j.at("w_size_bound_log2").get<double>();
  sr.g_prime = apply_edits(g, sr.edits_total);
  return sr;
}

AntiMatching antimatching_from_json(const Json& j) {
  AntiMatching am;
  am.owner = j.at("owner").get<int>();
  for (const Json& p : j.at("pairs")) am.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return am;
}

// ---- audit ------------------------------------------------------------------

namespace {

struct Auditor {
  AuditResult out;
  void note(const std::string& name, bool passed) {
    out.checks.emplace_back(name, passed);
    if (!passed) out.ok = false;
  }
};

VertexSet union_of(const std::vector<VertexSet>& blocks) {
  VertexSet out;
  for (const VertexSet& b : blocks) out = out.unite(b);
  return out;
}

bool pair_homogeneous(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long long edges = 0;
  for (int u : a)
    for (int v : b) edges += g.has_edge(u, v) ? 1 : 0;
  return edges == 0 || edges == (long long)a.size() * b.size();
}

// Clause names emitted by verify_structure_report, re-listed so the audit can
// report each one individually.
const char* const kStructureClauses[] = {
    "x-blocks-clique",    "y-independent",       "z-size",
    "z-isolated",         "q-deficiency",        "w-homogeneous",
    "total-edit-budget",  "inside-x-edit-budget", "edit-set-mismatch",
    "inside-edit-set-mismatch"};

void audit_structure(Auditor& a, const Graph& g, const StructureReport& sr) {
  std::vector<std::string> failures = verify_structure_report(g, sr);
  for (const char* name : kStructureClauses) {
    bool passed = std::find(failures.begin(), failures.end(), name) == failures.end();
    a.note(std::string("structure-") + name, passed);
  }
}

TargetProperty property_from_name(const std::string& name) {
  if (name == "induced-c4-free") return TargetProperty::C4Free;
  if (name == "chordal") return TargetProperty::Chordal;
  throw PreconditionError("unknown property: " + name);
}

FamilyDescriptor family_from_name(const std::string& name) {
  if (name == "c4-only") return FamilyDescriptor{FamilyKind::C4Only};
  if (name == "chordal-family") return FamilyDescriptor{FamilyKind::ChordalFamily};
  throw PreconditionError("unknown family: " + name);
}

void audit_count_c4(Auditor& a, const Graph& g, const Json& report) {
  long long reported = report.at("counts").at("induced_c4").get<long long>();
  a.note("c4-count-recomputed", count_induced_c4(g) == reported);
  const Json& certs = report.at("certificates");
  if (certs.contains("witness") && !certs.at("witness").is_null()) {
    std::vector<int> w = certs.at("witness").get<std::vector<int>>();
    a.note("c4-witness-induces-cycle", w.size() == 4 && induces_cycle(g, w));
  }
}

void audit_m2_check(Auditor& a, const Graph& g, const Json& report) {
  const Json& cfg = report.at("config");
  BipartitePair p{vertexset_from_json(cfg.at("x")), vertexset_from_json(cfg.at("y"))};
  validate_pair(g, p);
  long long m2 = count_induced_m2(g, p);
  a.note("m2-count-recomputed", m2 == report.at("counts").at("induced_m2").get<long long>());
  const Json& certs = report.at("certificates");
  std::string outcome = report.at("outcome").get<std::string>();
  if (outcome == "m2-witness") {
    const Json& wj = certs.at("witness");
    M2Witness w{wj.at("x1").get<int>(), wj.at("y1").get<int>(), wj.at("x2").get<int>(),
                wj.at("y2").get<int>()};
    a.note("m2-witness-verified", verify_m2_witness(g, p, w));
    a.note("m2-count-positive", m2 > 0);
    return;
  }
  a.note("m2-free-recomputed", m2 == 0);
  if (certs.contains("nested_order")) {
    std::vector<int> order = certs.at("nested_order").at("order").get<std::vector<int>>();
    bool chain = VertexSet(order) == p.x;
    for (std::size_t i = 0; i + 1 < order.size() && chain; ++i) {
      for (int y : p.y)
        if (g.has_edge(order[i], y) && !g.has_edge(order[i + 1], y)) chain = false;
    }
    a.note("nested-order-chain", chain);
  }
  if (certs.contains("partition") && !certs.at("partition").is_null()) {
    const Json& pj = certs.at("partition");
    std::vector<VertexSet> xb = blocks_from_json(pj.at("x_blocks"));
    std::vector<VertexSet> yb = blocks_from_json(pj.at("y_blocks"));
    bool cover = union_of(xb) == p.x && union_of(yb) == p.y;
    bool homog = true;
    for (std::size_t i = 0; i < xb.size(); ++i) {
      for (std::size_t j = 0; j < yb.size(); ++j) {
        if (i == j) continue;
        long long edges = 0;
        for (int u : xb[i])
          for (int v : yb[j]) edges += g.has_edge(u, v) ? 1 : 0;
        long long want = i > j ? (long long)xb[i].size() * yb[j].size() : 0;
        if (edges != want) homog = false;
      }
    }
    a.note("pair-partition-cover", cover);
    a.note("pair-partition-homogeneous", homog);
  }
}

void audit_partition(Auditor& a, const Graph& g, const Json& report) {
  const Json& cfg = report.at("config");
  CliqueSystem sys;
  sys.cliques = blocks_from_json(cfg.at("blocks"));
  try {
    validate_clique_system(g, sys);
    a.note("clique-system-valid", true);
  } catch (const PreconditionError&) {
    a.note("clique-system-valid", false);
    return;
  }
  Rational delta = rational_from_json(cfg.at("delta"));
  long long n = g.vertex_count();
  const Json& certs = report.at("certificates");
  const Json& rj = certs.at("refinement");
  Partition part = partition_from_json(rj.at("partition"));
  HomogeneityLedger fresh = homogeneity_deficiency(g, part);
  a.note("deficiency-recomputed",
         fresh.deficiency == rj.at("ledger").at("deficiency").get<long long>());
  a.note("deficiency-within-delta", Rational(fresh.deficiency) <= delta * Rational(n * n));
  a.note("refinement-refines-cliques",
         part.ground == sys.ground() &&
             part.refines(Partition::create(sys.ground(), sys.cliques)));
  int k = (int)sys.cliques.size();
  bool count_ok;
  try {
    count_ok = Rational(part.block_count()) <= Rational(k) * (Rational(2) / delta).pow((unsigned)k);
  } catch (const std::overflow_error&) {
    count_ok = std::log2((double)std::max(part.block_count(), 1)) <=
               std::log2((double)k) + k * std::log2(2.0 / delta.to_double());
  }
  a.note("block-count-bound", count_ok);
  if (certs.contains("strong") && !certs.at("strong").is_null()) {
    StrongPartition sp = strong_from_json(certs.at("strong"));
    a.note("strong-z-size", Rational(sp.z.size()) < delta * Rational(n));
    a.note("strong-q-deficiency",
           Rational(homogeneity_deficiency(g, sp.q_blocks).deficiency) <= delta * Rational(n * n));
    std::vector<VertexSet> trimmed;
    for (const VertexSet& c : sys.cliques) trimmed.push_back(c.minus(sp.z));
    bool refines = sp.q_blocks.ground == sys.ground().minus(sp.z) &&
                   sp.q_blocks.refines(Partition::create(sys.ground().minus(sp.z), trimmed));
    a.note("strong-q-refines-cliques", refines);
    bool inside = sp.w_cores.size() == sp.q_blocks.blocks.size();
    for (std::size_t i = 0; inside && i < sp.w_cores.size(); ++i)
      inside = sp.w_cores[i].is_subset_of(sp.q_blocks.blocks[(std::size_t)i]);
    a.note("strong-w-within-blocks", inside);
    bool homog = true;
    for (std::size_t i = 0; i < sp.w_cores.size(); ++i)
      for (std::size_t j = i + 1; j < sp.w_cores.size(); ++j)
        if (!pair_homogeneous(g, sp.w_cores[i], sp.w_cores[j])) homog = false;
    a.note("strong-w-homogeneous", homog);
  }
}

void audit_decompose(Auditor& a, const Graph& g, const Json& report) {
  const Json& rj = report.at("certificates").at("result");
  std::string kind = rj.at("kind").get<std::string>();
  if (kind == "structure") {
    StructureReport sr = structure_from_json(rj.at("report"), g);
    audit_structure(a, g, sr);
    return;
  }
  if (kind == "c4-rich") {
    VertexSet residual = vertexset_from_json(rj.at("residual"));
    long long cnt = count_induced_c4(induced_subgraph(g, residual));
    a.note("residual-c4-recomputed", cnt == rj.at("residual_c4").get<long long>() && cnt > 0);
    return;
  }
  a.note("stage-failure-nothing-to-verify", true);
}

void audit_edit_indset(Auditor& a, const Graph& g, const Json& report) {
  const Json& cfg = report.at("config");
  VertexSet x = vertexset_from_json(cfg.at("x"));
  VertexSet y = vertexset_from_json(cfg.at("y"));
  FamilyDescriptor fam = family_from_name(cfg.at("family").get<std::string>());
  const Json& certs = report.at("certificates");
  EditSet edits = editset_from_json(certs.at("edit").at("edits"));
  Graph h = apply_edits(g, edits);
  a.note("edited-recognizer-free", fam.is_free(h));
  bool ams_ok = true, degree_ok = true, owners_ok = true;
  long long total_pairs = 0;
  std::vector<int> owners;
  for (const Json& amj : certs.at("edit").at("antimatchings")) {
    AntiMatching am = antimatching_from_json(amj);
    owners.push_back(am.owner);
    try {
      verify_antimatching(g, x, am);
    } catch (const PreconditionError&) {
      ams_ok = false;
    }
    long long m = am.size();
    if (2 * d2(g, x, am.owner) < m * m) degree_ok = false;
    total_pairs += m;
  }
  if (VertexSet(owners) != y || (int)owners.size() != y.size()) owners_ok = false;
  a.note("antimatchings-verified", ams_ok);
  a.note("antimatching-owners-cover-y", owners_ok);
  a.note("pair-degree-bound", degree_ok);
  a.note("edit-size-twice-pairs", (long long)edits.size() == 2 * total_pairs);
  C4LowerBoundCertificate fresh = c4_lower_bound_certificate(g, x, y);
  const Json& cj = certs.at("lower_bound");
  a.note("lower-bound-recomputed",
         fresh.certified_count == cj.at("certified_count").get<long long>() &&
             fresh.t_sum == cj.at("t_sum").get<long long>() &&
             fresh.jensen_bound == rational_from_json(cj.at("jensen_bound")));
}

void audit_farness(Auditor& a, const Graph& g, const Json& report) {
  const Json& cfg = report.at("config");
  TargetProperty prop = property_from_name(cfg.at("family").get<std::string>());
  const Json& cj = report.at("certificates").at("farness");
  bool packing_ok = true;
  std::set<std::pair<int, int>> used;
  const Json& witnesses = cj.at("packing").at("witnesses");
  for (const Json& wj : witnesses) {
    std::vector<int> w = wj.get<std::vector<int>>();
    if (!induces_cycle(g, w)) packing_ok = false;
    if (prop == TargetProperty::C4Free && w.size() != 4) packing_ok = false;
    if (w.size() < 4) packing_ok = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int u = w[i], v = w[(i + 1) % w.size()];
      if (!used.insert({std::min(u, v), std::max(u, v)}).second) packing_ok = false;
    }
  }
  a.note("packing-verified", packing_ok);
  int lower = cj.at("lower").get<int>();
  a.note("packing-count-matches",
         lower == (int)witnesses.size() && lower == cj.at("packing").at("count").get<int>());
  EditSet upper_edits = editset_from_json(cj.at("upper_result").at("edits"));
  int upper = cj.at("upper").get<int>();
  a.note("upper-edits-verified", satisfies_property(apply_edits(g, upper_edits), prop) &&
                                     upper == upper_edits.size());
  if (!cj.at("exact").is_null()) {
    int exact = cj.at("exact").get<int>();
    EditSet exact_edits = editset_from_json(cj.at("exact_result").at("edits"));
    a.note("exact-edits-verified", satisfies_property(apply_edits(g, exact_edits), prop) &&
                                       exact == exact_edits.size());
    auto rerun = exact_edit_distance(g, prop, exact, g.vertex_count());
    a.note("exact-distance-recomputed", rerun.has_value() && rerun->distance == exact);
    a.note("sandwich-ordering", lower <= exact && exact <= upper);
  } else {
    a.note("sandwich-ordering", lower <= upper);
  }
}

void audit_lowerbound(Auditor& a, const Graph& g, const Json& report) {
  const Json& cfg = report.at("config");
  BlowupSpec spec{cfg.at("k").get<int>(), cfg.at("f").get<int>()};
  Blowup b = blowup_cycle(spec);
  a.note("blowup-graph-matches", g == b.graph);
  a.note("edge-count-formula",
         b.graph.edge_count() == report.at("counts").at("edges").get<long long>());
  const Json& certs = report.at("certificates");
  if (certs.contains("short_cycles") && !certs.at("short_cycles").is_null()) {
    ShortCycleScan scan = verify_no_short_induced_cycles(b);
    a.note("short-cycle-scan-reproduced",
           scan.clean == certs.at("short_cycles").at("clean").get<bool>());
  }
  if (report.at("counts").contains("transversals")) {
    TransversalHypergraph h = transversal_cycle_hypergraph(b.graph, b.parts);
    a.note("transversal-count-recomputed",
           (long long)h.edges.size() == report.at("counts").at("transversals").get<long long>());
  }
  if (certs.contains("destruction") && !certs.at("destruction").is_null()) {
    DestructionScan scan = exhaustive_single_edit_destruction(b);
    const Json& dj = certs.at("destruction");
    a.note("destruction-reproduced", scan.base == dj.at("base").get<long long>() &&
                                         scan.worst_destroyed ==
                                             dj.at("worst_destroyed").get<long long>() &&
                                         scan.within_bound == dj.at("within_bound").get<bool>());
  }
  if (certs.contains("resilience") && !certs.at("resilience").is_null()) {
    Rng rng((std::uint64_t)cfg.at("seed").get<long long>());
    ResilienceResult fresh = edit_resilience_check(spec, cfg.at("edits").get<int>(), rng,
                                                   cfg.at("trials").get<int>());
    const Json& sj = certs.at("resilience");
    a.note("resilience-reproduced", fresh.ok == sj.at("ok").get<bool>() &&
                                        fresh.base == sj.at("base").get<long long>() &&
                                        fresh.worst == sj.at("worst").get<long long>());
  }
}

void audit_pipeline(Auditor& a, const Graph& g, const Json& report) {
  const Json& pj = report.at("certificates");
  TargetProperty prop = property_from_name(pj.at("property").get<std::string>());
  std::string kind = pj.at("outcome").at("kind").get<std::string>();
  std::optional<StructureReport> sr;
  if (!pj.at("structure").is_null()) {
    sr = structure_from_json(pj.at("structure"), g);
    audit_structure(a, g, *sr);
  }
  if (kind == "already-free") {
    a.note("input-recognizer-recomputed", satisfies_property(g, prop));
    return;
  }
  if (kind == "c4-rich") {
    const Json& oj = pj.at("outcome");
    VertexSet residual = vertexset_from_json(oj.at("residual"));
    long long cnt = count_induced_c4(induced_subgraph(g, residual));
    a.note("residual-c4-recomputed", cnt == oj.at("residual_c4").get<long long>() && cnt > 0);
    return;
  }
  if (kind == "stage-failure") {
    a.note("stage-failure-nothing-to-verify", true);
    return;
  }
  detail::require(sr.has_value(), "certified pipeline outcome without structure");
  Graph g2 = homogenize_on_w(sr->g_prime, *sr);
  VertexSet x_all = union_of(sr->x_blocks);
  if (kind == "cycle-replication") {
    const Json& rj = pj.at("outcome").at("replication");
    std::vector<int> cycle = rj.at("cycle").get<std::vector<int>>();
    std::vector<int> blocks = rj.at("blocks").get<std::vector<int>>();
    VertexSet x_rest = x_all.minus(sr->z);
    bool inside = true;
    for (int v : cycle) inside = inside && x_rest.contains(v);
    a.note("cycle-within-x-rest", inside);
    a.note("cycle-induced-in-homogenized", induces_cycle(g2, cycle));
    bool blocks_match = cycle.size() == blocks.size();
    std::map<int, int> per_block;
    for (std::size_t i = 0; blocks_match && i < cycle.size(); ++i) {
      if (sr->strong.q_blocks.block_of(cycle[i]) != blocks[i]) blocks_match = false;
      per_block[blocks[i]] += 1;
    }
    a.note("cycle-blocks-match", blocks_match);
    bool capacity = blocks_match;
    for (auto [bi, cnt] : per_block) {
      if (bi < 0 || bi >= (int)sr->strong.w_cores.size() ||
          cnt > sr->strong.w_cores[(std::size_t)bi].size())
        capacity = false;
    }
    a.note("replication-block-capacity", capacity);
    if (!pj.at("outcome").at("cycle_bound").is_null()) {
      int l_max = pj.at("outcome").at("cycle_bound").at("l_max").get<int>();
      a.note("cycle-length-within-bound",
             l_max == 2 * (int)sr->x_blocks.size() && (int)cycle.size() <= l_max);
    }
    return;
  }
  // indset-edit
  const Json& ej = pj.at("outcome").at("edit");
  EditSet edits = editset_from_json(ej.at("edits"));
  Graph h = apply_edits(g2, edits);
  FamilyDescriptor fam{prop == TargetProperty::Chordal ? FamilyKind::ChordalFamily
                                                       : FamilyKind::C4Only};
  a.note("edited-recognizer-free", fam.is_free(h));
  bool ams_ok = true;
  for (const Json& amj : ej.at("antimatchings")) {
    try {
      verify_antimatching(g2, x_all, antimatching_from_json(amj));
    } catch (const PreconditionError&) {
      ams_ok = false;
    }
  }
  a.note("antimatchings-verified", ams_ok);
  C4LowerBoundCertificate fresh = c4_lower_bound_certificate(g2, x_all, sr->y);
  const Json& cj = pj.at("outcome").at("certificate");
  a.note("lower-bound-recomputed",
         fresh.certified_count == cj.at("certified_count").get<long long>() &&
             fresh.t_sum == cj.at("t_sum").get<long long>() &&
             fresh.jensen_bound == rational_from_json(cj.at("jensen_bound")));
}

void audit_gen(Auditor& a, const Graph& g, const Json& report) {
  const Json& cfg = report.at("config");
  const Json& counts = report.at("counts");
  a.note("generated-graph-counts", g.vertex_count() == counts.at("n").get<int>() &&
                                       g.edge_count() == counts.at("m").get<long long>());
  std::string model = cfg.at("model").get<std::string>();
  Rng rng(cfg.contains("seed") ? (std::uint64_t)cfg.at("seed").get<long long>() : 0);
  Graph again = generate_graph(
      model, cfg.contains("n") ? cfg.at("n").get<int>() : 0,
      cfg.contains("p") ? rational_from_json(cfg.at("p")) : Rational(1, 2),
      cfg.contains("k") ? cfg.at("k").get<int>() : 0,
      cfg.contains("f") ? cfg.at("f").get<int>() : 0, rng);
  a.note("generation-reproduced", again == g);
}

}  // namespace

AuditResult audit_report_against(const Json& report, const Graph& g) {
  Auditor a;
  if (report.at("schema").get<int>() != 1) {
    a.note("schema-version-known", false);
    return a.out;
  }
  std::string op = report.at("config").at("op").get<std::string>();
  try {
    if (op == "count-c4") audit_count_c4(a, g, report);
    else if (op == "m2-check") audit_m2_check(a, g, report);
    else if (op == "partition") audit_partition(a, g, report);
    else if (op == "decompose") audit_decompose(a, g, report);
    else if (op == "edit-indset") audit_edit_indset(a, g, report);
    else if (op == "farness") audit_farness(a, g, report);
    else if (op == "lowerbound") audit_lowerbound(a, g, report);
    else if (op == "pipeline-c4" || op == "pipeline-chordal") audit_pipeline(a, g, report);
    else if (op == "gen") audit_gen(a, g, report);
    else a.note("op-known", false);
  } catch (const Json::exception&) {
    throw;  // malformed report, the caller's problem
  } catch (const std::exception& e) {
    // A claim that cannot even be rebuilt (bad edit direction, broken
    // partition, ...) is a failed audit, not an input error.
    a.note(std::string("audit-error: ") + e.what(), false);
  }
  return a.out;
}

AuditResult audit_report(const Json& report) {
  const Json& cfg = report.at("config");
  std::string op = cfg.at("op").get<std::string>();
  if (report.at("outcome").get<std::string>() == "input-error" || op == "report-audit") {
    Auditor a;
    a.note("nothing-to-verify", true);
    return a.out;
  }
  if (op == "lowerbound") {
    BlowupSpec spec{cfg.at("k").get<int>(), cfg.at("f").get<int>()};
    return audit_report_against(report, blowup_cycle(spec).graph);
  }
  std::string path = op == "gen" ? cfg.at("out").get<std::string>()
                                 : cfg.at("input").get<std::string>();
  return audit_report_against(report, parse_graph_file(path));
}

}  // namespace c4lab

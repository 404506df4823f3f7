#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "c4lab/chordal.hpp"
#include "c4lab/lowerbound.hpp"

namespace c4lab {

using Json = nlohmann::ordered_json;

// ---- struct -> json ---------------------------------------------------------
// Key order is fixed by construction, so reports for equal inputs and seeds
// dump to identical bytes. Rationals serialize through Rational::str and parse
// back exactly; graphs are never embedded, only edit sets against the input.

Json json_of(const Rational& r);
Json json_of(const VertexSet& s);
Json json_of(const EditSet& e);
Json json_of(const M2Witness& w);
Json json_of(const NestedOrder& o);
Json json_of(const PairPartition& p);
Json json_of(const Partition& p);
Json json_of(const HomogeneityLedger& l);
Json json_of(const RefinementResult& r);
Json json_of(const StrongPartition& sp);
Json json_of(const M2EditRecord& r);
Json json_of(const StructureReport& sr);
Json json_of(const CondRegResult& r);
Json json_of(const AntiMatching& am);
Json json_of(const IndsetEditResult& r);
Json json_of(const C4LowerBoundCertificate& c);
Json json_of(const PackingResult& p);
Json json_of(const ExactDistanceResult& r);
Json json_of(const UpperBoundResult& r);
Json json_of(const FarnessCertificate& c);
Json json_of(const BlowupSpec& s);
Json json_of(const ShortCycleScan& s);
Json json_of(const DestructionScan& s);
Json json_of(const ResilienceResult& r);
Json json_of(const CycleBoundLedger& l);
Json json_of(const ReplicationCheck& r);
Json json_of(const PipelineOutcome& o);
Json json_of(const PipelineReport& r);
Json json_of(const std::vector<std::pair<std::string, bool>>& checks);

// ---- json -> struct ---------------------------------------------------------
// Inverses for the pieces the audit rebuilds. Malformed json throws (nlohmann
// exceptions or the library's own error types); callers map that to an input
// error, never to a failed check.

Rational rational_from_json(const Json& j);
VertexSet vertexset_from_json(const Json& j);
EditSet editset_from_json(const Json& j);
Partition partition_from_json(const Json& j);
StrongPartition strong_from_json(const Json& j);
// g is the unedited input graph; g_prime is rebuilt by applying edits_total,
// which also re-validates every edit direction.
StructureReport structure_from_json(const Json& j, const Graph& g);
AntiMatching antimatching_from_json(const Json& j);

// ---- report audit -----------------------------------------------------------

struct AuditResult {
  bool ok = true;
  std::vector<std::pair<std::string, bool>> checks;
};

// Re-verifies everything a report claims against the graph it names: witnesses
// are re-tested, edit sets re-applied and fed to the recognizers, counts and
// certificates recomputed from scratch. Nothing is taken from the report on
// trust. The graph comes from config.input (config.out for generated graphs);
// subcommands that construct their own graph are rebuilt from the config echo.
AuditResult audit_report(const Json& report);
AuditResult audit_report_against(const Json& report, const Graph& g);

}  // namespace c4lab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c4lab/decomposition.hpp"
#include "c4lab/farness.hpp"
#include "c4lab/indset.hpp"

namespace c4lab {

struct CycleBoundLedger {
  int k = 0;      // clique blocks covering x minus z
  int l_max = 0;  // 2k: an induced cycle meets each clique in at most 2 vertices
  Rational alpha;
};

// l_max = 2k, and 2k <= 20 * alpha^-3 is asserted (k is bounded by the peel).
CycleBoundLedger cycle_length_bound(const StructureReport& sr);

struct PipelineConfig {
  Rational epsilon;                        // (0, 1/2)
  std::optional<Rational> alpha_override;  // default epsilon^6 / 2^11
  std::optional<Rational> gamma_override;  // default 1/4; the paper-style value is
                                           // reported in log2 and underflows rationals
  ConstantsConfig constants;
  DenseFinderPolicy dense_policy;
  StrongPartitionConfig strong;
  int m2_exact_cap = 9;
  int replication_samples = 100;
};

struct ReplicationCheck {
  std::vector<int> cycle;   // induced in the homogenized graph on x minus z, host labels
  std::vector<int> blocks;  // q-block index per cycle position
  int samples_verified = 0;
  long long copies = 0;        // distinct replicated tuples, exact when copies_exact
  bool copies_exact = false;
  double copies_log2 = 0;
};

struct PipelineOutcome {
  enum class Kind { AlreadyFree, C4Rich, CycleReplication, IndsetEdit, StageFailure };
  Kind kind = Kind::AlreadyFree;
  // C4Rich
  VertexSet residual;
  long long residual_c4 = 0;
  // CycleReplication
  std::optional<ReplicationCheck> replication;
  std::optional<CycleBoundLedger> cycle_bound;
  // IndsetEdit
  std::optional<IndsetEditResult> edit;
  std::optional<C4LowerBoundCertificate> certificate;
  // StageFailure
  std::string failure_stage;
  std::string failure_reason;
};

struct PipelineReport {
  TargetProperty property = TargetProperty::C4Free;
  Rational epsilon, alpha, gamma;
  double gamma_formula_log2 = 0;  // the paper-style gamma for this property
  std::optional<StructureReport> structure;
  PipelineOutcome outcome;
  std::vector<std::pair<std::string, bool>> invariant_checks;
};

// Decomposition-driven removal pipeline. Outcomes: the input already satisfies
// the property; the peel residual is C4-rich (exact count attached); a
// violating cycle survives in the homogenized graph and is replicated across
// the w cores (every sampled tuple re-verified in g-prime); or the indset edit
// applies and certifies freeness together with a C4-count lower bound.
// Decomposition failures surface as a structured stage failure, never as a
// certified outcome.
PipelineReport c4_pipeline(const Graph& g, const PipelineConfig& cfg, Rng& rng);
PipelineReport chordal_pipeline(const Graph& g, const PipelineConfig& cfg, Rng& rng);

}  // namespace c4lab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c4lab/graph.hpp"
#include "c4lab/partition.hpp"

namespace c4lab {

// ---- vertex samplers ---------------------------------------------------------

struct CliqueSampleConfig {
  int q = 0;        // sample size; <= n enforced on use
  Rational rho;     // target clique density
  Rational eps;     // distance parameter, 0 < eps < rho^2/2
};

// ceil(100 * eps^-5), capped at n.
int default_clique_sample_size(const Rational& eps, int n);

struct CliqueSampleResult {
  bool looks_far;           // omega(G[Q]) < (rho - eps/2) * q
  int sample_clique;        // exact omega of the sampled subgraph
  std::vector<int> sample;  // the q sampled vertices, in draw order
  VertexSet clique_witness;
};

CliqueSampleResult sample_clique_test(const Graph& g, const CliqueSampleConfig& cfg, Rng& rng);

struct DensitySampleConfig {
  int r = 0;      // sample size, r >= 100/alpha^2 enforced (after capping at n)
  Rational alpha; // density parameter
};

struct DensitySampleResult {
  bool passed;            // e(R) >= (alpha/2) * r^2
  long long sampled_edges;
  std::vector<int> sample;
};

DensitySampleResult sample_density_test(const Graph& g, const DensitySampleConfig& cfg, Rng& rng);

// ---- dense subset search -------------------------------------------------------

struct DenseFinderPolicy {
  int local_search_rounds = 200;
  int exhaustive_max_n = 16;  // full subset scan fallback below this size
};

// A vertex set with >= min_size vertices and density >= min_density, or
// nothing when the search strategies fail (not a nonexistence proof). Strategy:
// min-degree peeling with densest-prefix tracking, then swap-based local
// search, then exhaustive scan on small graphs.
std::optional<VertexSet> find_dense_subset(const Graph& g, const VertexSet& within, int min_size,
                                           const Rational& min_density,
                                           const DenseFinderPolicy& policy = {});

// ---- clique size vs edge density ------------------------------------------------

struct GhsResult {
  bool holds;        // omega >= 0.4 * alpha^2 * n with alpha = e/n^2
  int clique;
  Rational alpha;
  VertexSet witness;
};

// Requires count_induced_c4(g) == 0; throws PreconditionError with a C4.
GhsResult ghs_check(const Graph& g);

// ---- peeling -------------------------------------------------------------------

struct ConstantsConfig {
  Rational c = Rational(1);  // reported alongside count thresholds, not used numerically
  int d = 1;                 // exponent in the density slack 0.25 * gamma^d
};

struct PeelResult {
  enum class Kind { Partitioned, C4Rich, Incomplete };
  Kind kind = Kind::Partitioned;
  std::vector<VertexSet> x_blocks;
  VertexSet y;
  // For C4Rich / Incomplete: the residual set that stopped the loop, and the
  // exact induced C4 count inside it (zero for Incomplete).
  VertexSet residual;
  long long residual_c4 = 0;
  int iterations = 0;
};

// Repeatedly extracts a dense set X_i (size >= max(2, 0.1*alpha^2*|V_i|),
// density >= 1 - 0.25*gamma^d) until the residual has fewer than alpha*n^2
// edges; that residual is y. When extraction fails the loop stops: C4Rich if
// the residual still holds induced C4s, Incomplete otherwise.
PeelResult peel_decomposition(const Graph& g, const Rational& alpha, const Rational& gamma,
                              const ConstantsConfig& constants = {},
                              const DenseFinderPolicy& policy = {});

// ---- conditional regularity -------------------------------------------------------

struct M2EditRecord {
  int i, j;        // x block indices
  bool exact;      // exact or heuristic edit search
  int edits;
};

struct StructureReport {
  Graph g_prime;
  std::vector<VertexSet> x_blocks;
  VertexSet y, z;
  StrongPartition strong;
  EditSet edits_total;     // E(g_prime) vs E(g)
  EditSet edits_inside_x;  // restricted to X minus z on both sides
  Rational alpha, gamma;
  std::vector<M2EditRecord> m2_records;
  double w_size_bound_log2 = 0;  // (alpha/20)^(4000*alpha^-6) in log2, report only
};

struct CondRegResult {
  enum class Kind { Structure, C4Rich, StageFailure };
  Kind kind = Kind::Structure;
  std::optional<StructureReport> report;
  // C4Rich payload
  VertexSet residual;
  long long residual_c4 = 0;
  // StageFailure payload
  std::string failure_stage;
  std::string failure_reason;
};

struct CondRegConfig {
  ConstantsConfig constants;
  DenseFinderPolicy dense_policy;
  StrongPartitionConfig strong;
  int m2_exact_cap = 9;
};

// Builds an edited graph g' together with the partition structure: y made
// independent, each x block completed to a clique, cross pairs made M2-free,
// small exceptional set z isolated. Five clauses are machine-checked before a
// report is emitted; any violated budget becomes a StageFailure, never a
// silent pass.
CondRegResult conditional_regularity(const Graph& g, const Rational& alpha, const Rational& gamma,
                                     Rng& rng, const CondRegConfig& cfg = {});

// Re-types every q-block pair to its w-core pair's relation (complete or
// empty). Changes at most the q deficiency; idempotent.
Graph homogenize_on_w(const Graph& g_prime, const StructureReport& sr);

// The five emitted-report clauses, re-checked from scratch. Returns failing
// clause names; empty means the report is sound against `g`.
std::vector<std::string> verify_structure_report(const Graph& g, const StructureReport& sr);

}  // namespace c4lab

#pragma once

#include <string>
#include <vector>

#include "c4lab/graph.hpp"
#include "c4lab/m2free.hpp"

namespace c4lab {

// Ordered list of disjoint blocks covering a ground set. Blocks may be empty.
struct Partition {
  VertexSet ground;
  std::vector<VertexSet> blocks;

  static Partition create(VertexSet ground, std::vector<VertexSet> blocks);
  int block_count() const { return (int)blocks.size(); }
  // Index of the block holding v, -1 if v is outside the ground set.
  int block_of(int v) const;
  bool refines(const Partition& coarser) const;
  bool is_equipartition() const;  // block sizes differ by at most one
};

struct HomogeneityLedger {
  // Unordered block index pairs that are neither complete nor empty.
  std::vector<std::pair<int, int>> non_homog_pairs;
  long long deficiency = 0;  // sum of |U|*|V| over those pairs
};

// Every block pair is classified by exhaustive cross-edge counting.
HomogeneityLedger homogeneity_deficiency(const Graph& g, const Partition& p);

// A system of vertex-disjoint cliques with pairwise M2-free cross pairs; the
// input shape for the refinement operations below.
struct CliqueSystem {
  std::vector<VertexSet> cliques;
  VertexSet ground() const;
};

// Verifies the clique-system preconditions; throws PreconditionError with the
// offending block or witness otherwise.
void validate_clique_system(const Graph& g, const CliqueSystem& sys);

struct RefinementResult {
  Partition partition;
  HomogeneityLedger ledger;
  int r;  // interval count used per pair
};

// Refines a clique system until the leftover non-homogeneous block pairs have
// total deficiency at most delta * n^2 (n = ground size). Each cross pair is
// split with homog_pair_partition at r = ceil(1/delta); each clique then takes
// the common refinement of its pairwise splits, blocks ordered by constituent
// indices. Total block count stays within k * (2/delta)^k.
RefinementResult delta_homog_refinement(const Graph& g, const CliqueSystem& sys,
                                        const Rational& delta);

struct StrongPartition {
  VertexSet z;                     // small exceptional set, |z| < delta * n
  Partition q_blocks;              // refine the cliques minus z; pair deficiency <= delta * n^2
  std::vector<VertexSet> w_cores;  // w_cores[i] within q_blocks[i]; pairwise homogeneous
  int attempts = 0;
  int coarse_blocks = 0;
  int fine_blocks = 0;
  int refined_product_cap = 0;     // coarse_blocks * fine_blocks, bound on the merge
  double w_size_bound_log2 = 0;    // recorded, not asserted: tiny at this scale
};

struct StrongPartitionConfig {
  int max_retries = 64;
};

// Two-level refinement: a coarse delta split, big blocks kept as q_blocks and
// the rest pooled into z, then a much finer split whose blocks seed the
// w_cores by sampling one vertex per q block. Resamples everything until all
// w core pairs are homogeneous; throws RetriesExhaustedError with per-attempt
// transcripts when the cap runs out.
StrongPartition strong_homog_partition(const Graph& g, const CliqueSystem& sys,
                                       const Rational& delta, Rng& rng,
                                       const StrongPartitionConfig& cfg = {});

}  // namespace c4lab

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "c4lab/graph.hpp"

namespace c4lab {

// Cycle blow-up: C_k with every vertex replaced by an f-clique and every edge
// by a complete bipartite graph.
struct BlowupSpec {
  int k = 3;  // cycle length, >= 3
  int f = 1;  // part size, >= 1
};

Rational blowup_epsilon(int k);          // 1/(2k^2)
long long blowup_edge_count(const BlowupSpec& spec);  // k*binom(f,2) + k*f^2

struct Blowup {
  BlowupSpec spec;
  Graph graph;
  std::vector<VertexSet> parts;  // in cycle order; part i spans [i*f, (i+1)*f)
};

// Parts are consecutive vertex ranges; (part i, part j) is complete iff
// j - i = +-1 mod k, empty otherwise. The edge-count formula is asserted.
Blowup blowup_cycle(const BlowupSpec& spec);

struct ShortCycleScan {
  bool clean = true;
  int length = 0;                         // of the counterexample, when found
  std::optional<std::vector<int>> cycle;  // induced C_l with 4 <= l < k
};

// Brute force over 4 <= l < k within the exact caps.
ShortCycleScan verify_no_short_induced_cycles(const Blowup& b, const ExactCaps& caps = {});

struct TransversalHypergraph {
  std::vector<VertexSet> parts;
  std::vector<std::vector<int>> edges;  // tuples (v_1..v_k), one per part, inducing a k-cycle
};

// Every transversal tuple is tested against the host; for the unedited
// blow-up the edge count is exactly f^k.
TransversalHypergraph transversal_cycle_hypergraph(const Graph& g,
                                                   const std::vector<VertexSet>& parts);

struct DestructionScan {
  long long base = 0;           // transversal cycles before any edit
  long long per_edit_bound = 0; // f^(k-2)
  long long worst_destroyed = 0;
  bool within_bound = true;
  std::optional<std::pair<int, int>> worst_pair;
};

// Toggles every vertex pair once and recounts; the per-edit destruction never
// exceeds f^(k-2) because a toggled pair pins two coordinates of any
// transversal cycle it breaks.
DestructionScan exhaustive_single_edit_destruction(const Blowup& b);

struct ResilienceResult {
  bool ok = true;
  long long base = 0;
  long long floor = 0;  // base - m * f^(k-2)
  long long worst = 0;  // smallest surviving count over the trials
  int trials = 0;
  std::optional<EditSet> violating;
};

// Seeded random edit sets of size m; the surviving transversal count must
// stay at or above base - m*f^(k-2) on every trial. Requires m < f^2 so the
// floor stays positive.
ResilienceResult edit_resilience_check(const BlowupSpec& spec, int m, Rng& rng, int trials);

// Subsets U_i of size f, one per part, with every transversal of the U_i an
// edge of h. Brute force; requires parts <= 6 and f <= 2.
std::optional<std::vector<VertexSet>> find_complete_kpartite_subhypergraph(
    const TransversalHypergraph& h, int f);

struct HardFamilyMember {
  int k;
  int f;
  Rational eps;  // 1/(2k^2)
  Graph graph;
};

struct HardFamily {
  Graph c4;
  std::vector<HardFamilyMember> members;
};

// The C4 plus the blow-ups B_{k, g(eps_k)} for k in [k_min, k_max], eps_k =
// 1/(2k^2). k_min >= 5: shorter blow-ups contain induced C4s themselves.
HardFamily build_hard_family(const std::function<int(const Rational&)>& g_table, int k_min,
                             int k_max);

}  // namespace c4lab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c4lab/graph.hpp"

namespace c4lab {

enum class TargetProperty { C4Free, Chordal };

const char* target_property_name(TargetProperty p);
bool satisfies_property(const Graph& g, TargetProperty p);
// A violating induced cycle in cyclic order (a C4 for C4Free), when present.
std::optional<std::vector<int>> find_property_witness(const Graph& g, TargetProperty p);

struct PackingResult {
  int count = 0;
  std::vector<std::vector<int>> witnesses;  // cyclic order; pairwise share no vertex pair
};

// Greedy maximal collection of violating cycles no two of which share a vertex
// pair. Any edit set reaching the property must toggle a pair inside every
// witness, and pair-disjointness makes those toggles distinct, so `count` is a
// valid lower bound on the edit distance. Witnesses are scanned in
// (length, vertex-set) lexicographic order; each is re-verified.
PackingResult packing_lower_bound(const Graph& g, TargetProperty prop,
                                  const ExactCaps& caps = {});

struct ExactDistanceResult {
  int distance = 0;
  EditSet edits;
};

// Minimum edge toggles to reach the property, by iterative deepening; each
// level branches over the vertex pairs of a violating cycle of the current
// graph, which is complete because any solution must toggle such a pair.
// Returns nothing when the distance exceeds `budget`. Inputs with more than
// `exact_n_cap` vertices are only accepted with budget <= 8 (else BudgetError).
std::optional<ExactDistanceResult> exact_edit_distance(const Graph& g, TargetProperty prop,
                                                       int budget, int exact_n_cap = 8);

struct UpperBoundResult {
  int count = 0;
  EditSet edits;
  std::string strategy;
};

// Best of the constructive strategies (split flattening outside a maximum
// clique; greedy witness elimination for C4, greedy fill-in for chordality).
// The returned edit set is applied and checked against the recognizer.
UpperBoundResult heuristic_upper_bound(const Graph& g, TargetProperty prop);

struct FarnessCertificate {
  int lower = 0;
  std::optional<int> exact;
  int upper = 0;
  PackingResult packing;
  std::optional<ExactDistanceResult> exact_result;
  UpperBoundResult upper_result;
};

// lower <= exact <= upper is asserted whenever the exact search completes.
FarnessCertificate farness_certificate(const Graph& g, TargetProperty prop, int exact_n_cap = 8,
                                       int fallback_budget = 8);

}  // namespace c4lab

#pragma once

#include <optional>
#include <vector>

#include "c4lab/graph.hpp"

namespace c4lab {

// Pairwise-disjoint non-edges inside N_X(owner), maximal: every non-edge of
// N_X(owner) shares a vertex with some listed pair.
struct AntiMatching {
  int owner = -1;
  std::vector<std::pair<int, int>> pairs;  // each u < v

  int size() const { return (int)pairs.size(); }
};

// Re-checks disjointness, adjacency to the owner, non-adjacency of each pair,
// and maximality; throws PreconditionError naming the violation otherwise.
void verify_antimatching(const Graph& g, const VertexSet& x, const AntiMatching& am);

// Greedy over the non-edges of N_X(y) in lexicographic order.
AntiMatching maximal_antimatching(const Graph& g, const VertexSet& x, int y);

// Same greedy run on a seeded shuffle of N_X(y); exists to test that the
// downstream freeness conclusion does not depend on the greedy order.
AntiMatching maximal_antimatching_shuffled(const Graph& g, const VertexSet& x, int y, Rng& rng);

// Number of non-adjacent pairs of distinct vertices inside N_X(y).
long long d2(const Graph& g, const VertexSet& x, int y);

// The two families this library edits toward: induced-C4-freeness, and the
// family of all induced cycles of length >= 4 (chordality). Both contain C4,
// and in every member each vertex has two non-adjacent neighbours, which is
// what the editing argument needs.
enum class FamilyKind { C4Only, ChordalFamily };

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::C4Only;

  bool is_free(const Graph& g) const;
  // An induced member as a vertex list (in cycle order), when present.
  std::optional<std::vector<int>> find_violation(const Graph& g) const;
  const char* name() const;
};

// True iff no vertex of `member` has a clique for its neighbourhood inside
// `member`. Holds for every induced cycle of length >= 4.
bool neighborhoods_never_cliques(const Graph& member);

struct IndsetEditResult {
  Graph edited;
  EditSet edits;                           // x-y deletions only
  std::vector<AntiMatching> antimatchings; // one entry per y vertex, in order
};

// For each y, deletes the edges between y and the vertices of its maximal
// anti-matching. Requires x, y to partition the vertices, y independent, and
// g[x] free of the family; the edited graph is then free of the family too,
// and that is re-checked by the recognizer before returning. The edit count
// equals 2 * sum |M(y)| and each d2(y) >= |M(y)|^2 / 2; both are asserted.
// shuffle_rng switches the anti-matchings to the seeded-shuffle greedy.
IndsetEditResult indset_edit(const Graph& g, const VertexSet& x, const VertexSet& y,
                             const FamilyDescriptor& fam, Rng* shuffle_rng = nullptr);

struct C4LowerBoundCertificate {
  long long certified_count = 0;  // sum over non-adjacent x-pairs of binom(t(u,v), 2)
  long long t_sum = 0;            // sum of t(u,v); equals sum of d2(y) by double counting
  Rational jensen_bound;          // binom(|x|,2) * binom(t_sum / binom(|x|,2), 2), clamped at 0
};

// t(u,v) counts common y-neighbours of a non-adjacent pair u, v in x; every
// pair of those neighbours closes an induced C4, so the certified count is a
// lower bound on the induced-C4 count of g. Each counted quadruple is checked.
// The Jensen bound is the analytic relaxation of the same sum, reported for
// comparison; certified_count >= jensen_bound always.
C4LowerBoundCertificate c4_lower_bound_certificate(const Graph& g, const VertexSet& x,
                                                   const VertexSet& y);

}  // namespace c4lab

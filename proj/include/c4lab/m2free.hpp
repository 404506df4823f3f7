#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "c4lab/graph.hpp"

namespace c4lab {

// Ordered bipartite pair (X, Y) inside a host graph. Only cross edges matter
// to everything in this header; adjacency within X or within Y is ignored.
struct BipartitePair {
  VertexSet x, y;
};

void validate_pair(const Graph& g, const BipartitePair& p);

// x1, x2 in X and y1, y2 in Y with edges x1y1, x2y2 and non-edges x1y2, x2y1:
// a two-edge induced matching across the pair.
struct M2Witness {
  int x1, y1, x2, y2;
};

bool verify_m2_witness(const Graph& g, const BipartitePair& p, const M2Witness& w);

// First witness in lexicographic (x1, x2, y1, y2) scan order, if any.
std::optional<M2Witness> find_induced_m2(const Graph& g, const BipartitePair& p);

struct NestedOrder {
  std::vector<int> order;  // X sorted so cross neighborhoods grow by inclusion
};

// Sorts X by cross degree (ties by index) and verifies the inclusion chain.
// The chain exists iff the pair has no induced M2; on failure the returned
// witness is extracted from the first violated consecutive pair.
std::variant<NestedOrder, M2Witness> nested_order(const Graph& g, const BipartitePair& p);

struct PairPartition {
  std::vector<VertexSet> x_blocks;  // r interval blocks of the nested order
  std::vector<VertexSet> y_blocks;  // r+1 blocks; y_blocks[r] is the unreached rest
};

// Splits an M2-free pair so that (x_blocks[i], y_blocks[j]) is complete for
// i > j and empty for i < j. X is an equipartition of the nested order into
// consecutive intervals, larger blocks first; Y blocks are the neighborhood
// increments of the interval endpoints. Throws PreconditionError carrying an
// M2 witness when the pair is not M2-free.
PairPartition homog_pair_partition(const Graph& g, const BipartitePair& p, int r);

// Exact number of induced M2 quadruples across the pair.
long long count_induced_m2(const Graph& g, const BipartitePair& p);

enum class EditSearchMode { Exact, Heuristic };

struct M2EditResult {
  int edits;
  EditSet edit_set;
  EditSearchMode mode;
};

// Minimum cross-edge toggles making the pair M2-free. A pair is M2-free iff
// some order of X makes every N_X(y) a suffix, so the exact mode scans all
// |X|! orders and fits each y to its best suffix. Exact mode requires
// |X| <= exact_cap (default 9); heuristic mode uses the cross-degree order.
M2EditResult min_edits_to_m2free(const Graph& g, const BipartitePair& p,
                                 EditSearchMode mode = EditSearchMode::Exact,
                                 int exact_cap = 9);

}  // namespace c4lab

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "c4lab/errors.hpp"
#include "c4lab/rational.hpp"
#include "c4lab/rng.hpp"

namespace c4lab {

class Graph;

// Sorted duplicate-free list of vertex indices. Range checks against a host
// graph happen where a host is available, not at construction.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);
  static VertexSet range(int n);  // {0, 1, ..., n-1}

  const std::vector<int>& members() const { return members_; }
  int size() const { return (int)members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  int operator[](int i) const { return members_[(std::size_t)i]; }

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  VertexSet unite(const VertexSet& o) const;
  VertexSet minus(const VertexSet& o) const;
  VertexSet intersect(const VertexSet& o) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet& o) const { return members_ == o.members_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }
  bool operator<(const VertexSet& o) const { return members_ < o.members_; }

 private:
  std::vector<int> members_;
};

enum class EditKind { Add, Delete };

struct Edit {
  int u, v;  // u < v
  EditKind kind;
  bool operator==(const Edit& o) const { return u == o.u && v == o.v && kind == o.kind; }
};

// Set of edge toggles with distinct endpoint pairs, kept in lexicographic
// order. Direction consistency against a base graph is validated on apply.
class EditSet {
 public:
  EditSet() = default;

  void add(int u, int v, EditKind kind);
  int size() const { return (int)edits_.size(); }
  bool empty() const { return edits_.empty(); }
  const std::vector<Edit>& edits() const { return edits_; }
  bool touches_pair(int u, int v) const;

  EditSet reversed() const;  // swaps Add and Delete
  // Edits with both endpoints inside s.
  EditSet restricted_to(const VertexSet& s) const;
  void merge(const EditSet& o);  // throws on overlapping pairs

  // The toggle set turning `from` into `to`. Both graphs must share n.
  static EditSet diff(const Graph& from, const Graph& to);

  auto begin() const { return edits_.begin(); }
  auto end() const { return edits_.end(); }
  bool operator==(const EditSet& o) const { return edits_ == o.edits_; }

 private:
  std::vector<Edit> edits_;
};

// Undirected simple graph over vertices 0..n-1. One bitmask row per vertex, so
// membership tests and common-neighborhood intersections cost one word op per
// 64 vertices.
class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int words() const { return words_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[(std::size_t)u * words_ + (std::size_t)(v >> 6)] >> (v & 63)) & 1;
  }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  const std::uint64_t* row(int u) const { return &bits_[(std::size_t)u * words_]; }
  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  std::vector<std::pair<int, int>> edges() const;  // lexicographic

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  int n_;
  int words_;
  long long m_;
  std::vector<std::uint64_t> bits_;
};

// ---- edge-list text format ----------------------------------------------
// '#' lines are comments, first data line is "n m", then exactly m lines
// "u v" with 0 <= u < v < n. Serialization emits edges in lexicographic
// order, so parse(serialize(g)) == g.

Graph parse_graph(const std::string& text);
Graph parse_graph_file(const std::string& path);
std::string serialize_graph(const Graph& g);

// ---- subset primitives ----------------------------------------------------

long long edge_count_within(const Graph& g, const VertexSet& s);
Rational density(const Graph& g, const VertexSet& s);  // |s| >= 2
Graph induced_subgraph(const Graph& g, const VertexSet& s);  // vertex i -> rank in s
bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

// Word masks for s, for intersection against adjacency rows.
std::vector<std::uint64_t> set_mask(const Graph& g, const VertexSet& s);

// ---- counting and recognition kernels --------------------------------------

// Induced 4-cycles. Equals half the sum, over non-adjacent pairs {u,v}, of the
// number of non-adjacent pairs inside N(u) & N(v): each induced C4 is seen once
// from each of its two diagonals.
long long count_induced_c4(const Graph& g);

// One induced C4 in cycle order, if any.
std::optional<std::array<int, 4>> find_induced_c4(const Graph& g);

struct ChordalityResult {
  bool chordal;
  std::vector<int> cycle;  // an induced cycle of length >= 4 when !chordal
};

// Perfect-elimination-ordering search; on failure the witness comes from a
// shortest detour around a non-simplicial vertex, which is induced already.
ChordalityResult find_induced_cycle_geq4(const Graph& g);

struct ExactCaps {
  int max_cycle_len = 8;
  int max_n = 64;
};

// Exact number of l-subsets inducing a cycle, l >= 4. Cost is exponential in
// l; the caps guard accidental blowups and can be raised by the caller.
long long count_induced_cl(const Graph& g, int l, const ExactCaps& caps = {});
std::optional<std::vector<int>> find_induced_cl(const Graph& g, int l,
                                                const ExactCaps& caps = {});

// Calls fn once per induced l-cycle, in cyclic order starting at the cycle's
// minimum vertex. Same enumeration and caps as count_induced_cl.
void for_each_induced_cl(const Graph& g, int l,
                         const std::function<void(const std::vector<int>&)>& fn,
                         const ExactCaps& caps = {});

// True iff `cycle` (in cyclic order, length >= 3) induces exactly a cycle.
bool induces_cycle(const Graph& g, const std::vector<int>& cycle);

struct CliqueResult {
  int size;
  VertexSet witness;
};

// Exact maximum clique, branch and bound with greedy-coloring pruning.
CliqueResult max_clique(const Graph& g);

// ---- construction ----------------------------------------------------------

Graph random_graph(int n, const Rational& p, Rng& rng);

// Validates every edit direction against g; inconsistent edits throw.
Graph apply_edits(const Graph& g, const EditSet& e);

}  // namespace c4lab

#pragma once

// Brute-force reference implementations, independent of the library kernels
// they are checked against. Everything here enumerates subsets literally and
// is only meant for small inputs.

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "c4lab/graph.hpp"
#include "c4lab/m2free.hpp"
#include "c4lab/partition.hpp"

namespace oracle {

using c4lab::BipartitePair;
using c4lab::EditSet;
using c4lab::Graph;
using c4lab::Partition;
using c4lab::VertexSet;

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (int v = start; v <= n - (k - depth); ++v) {
      idx[(std::size_t)depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  if (k >= 0 && k <= n) rec(0, 0);
}

// 4 vertices all of induced degree 2 force a C4: the induced graph is a
// disjoint union of cycles covering 4 vertices, and no two cycles fit.
inline bool subset_induces_c4(const Graph& g, const std::vector<int>& s) {
  assert(s.size() == 4);
  for (int v : s) {
    int deg = 0;
    for (int u : s)
      if (u != v && g.has_edge(u, v)) ++deg;
    if (deg != 2) return false;
  }
  return true;
}

inline long long count_c4(const Graph& g) {
  long long total = 0;
  for_each_subset(g.vertex_count(), 4, [&](const std::vector<int>& s) {
    if (subset_induces_c4(g, s)) ++total;
  });
  return total;
}

// Induced C_l on the subset: every induced degree 2 and connected.
inline bool subset_induces_cycle(const Graph& g, const std::vector<int>& s) {
  int l = (int)s.size();
  for (int v : s) {
    int deg = 0;
    for (int u : s)
      if (u != v && g.has_edge(u, v)) ++deg;
    if (deg != 2) return false;
  }
  std::vector<int> stack = {s[0]};
  std::set<int> seen = {s[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : s)
      if (u != v && g.has_edge(u, v) && seen.insert(u).second) stack.push_back(u);
  }
  return (int)seen.size() == l;
}

inline long long count_cl(const Graph& g, int l) {
  long long total = 0;
  for_each_subset(g.vertex_count(), l, [&](const std::vector<int>& s) {
    if (subset_induces_cycle(g, s)) ++total;
  });
  return total;
}

inline bool is_chordal(const Graph& g) {
  for (int l = 4; l <= g.vertex_count(); ++l)
    if (count_cl(g, l) > 0) return false;
  return true;
}

inline int max_clique_size(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    best = std::max(best, (int)cur.size());
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!g.has_edge(u, v)) ok = false;
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return best;
}

// Literal quadruple scan for a cross induced two-edge matching.
inline bool has_m2(const Graph& g, const VertexSet& x, const VertexSet& y) {
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j)
      for (int a = 0; a < y.size(); ++a)
        for (int b = a + 1; b < y.size(); ++b) {
          bool e1 = g.has_edge(x[i], y[a]), e2 = g.has_edge(x[j], y[b]);
          bool e3 = g.has_edge(x[i], y[b]), e4 = g.has_edge(x[j], y[a]);
          if ((e1 && e2 && !e3 && !e4) || (e3 && e4 && !e1 && !e2)) return true;
        }
  return false;
}

inline long long count_m2(const Graph& g, const VertexSet& x, const VertexSet& y) {
  long long total = 0;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j)
      for (int a = 0; a < y.size(); ++a)
        for (int b = a + 1; b < y.size(); ++b) {
          bool e1 = g.has_edge(x[i], y[a]), e2 = g.has_edge(x[j], y[b]);
          bool e3 = g.has_edge(x[i], y[b]), e4 = g.has_edge(x[j], y[a]);
          if ((e1 && e2 && !e3 && !e4) || (e3 && e4 && !e1 && !e2)) ++total;
        }
  return total;
}

// Minimum cross-pair toggles to kill every M2, by exhaustive search over
// toggle subsets of growing size. cap bounds the answer we are willing to find.
inline int min_edits_m2(const Graph& g, const VertexSet& x, const VertexSet& y, int cap) {
  std::vector<std::pair<int, int>> pairs;
  for (int u : x)
    for (int v : y) pairs.push_back({std::min(u, v), std::max(u, v)});
  if (!has_m2(g, x, y)) return 0;
  for (int size = 1; size <= cap; ++size) {
    bool found = false;
    for_each_subset((int)pairs.size(), size, [&](const std::vector<int>& pick) {
      if (found) return;
      Graph h = g;
      for (int p : pick) h.toggle_edge(pairs[(std::size_t)p].first, pairs[(std::size_t)p].second);
      if (!has_m2(h, x, y)) found = true;
    });
    if (found) return size;
  }
  return cap + 1;  // above cap
}

// Per-y suffix fitting for one fixed order of X: a pair is M2-free iff each
// cross neighbourhood is a suffix of some common order, so the distance for
// that order is the sum of best symmetric differences.
inline int suffix_fit_cost(const Graph& g, const std::vector<int>& order, const VertexSet& y) {
  int m = (int)order.size();
  int total = 0;
  for (int yy : y) {
    int best = 1 << 30;
    for (int cut = 0; cut <= m; ++cut) {  // suffix order[cut..m)
      int cost = 0;
      for (int i = 0; i < m; ++i) {
        bool want = i >= cut;
        if (g.has_edge(order[(std::size_t)i], yy) != want) ++cost;
      }
      best = std::min(best, cost);
    }
    total += best;
  }
  return total;
}

inline int min_edits_m2_by_orders(const Graph& g, const VertexSet& x, const VertexSet& y) {
  std::vector<int> order = x.members();
  std::sort(order.begin(), order.end());
  int best = 1 << 30;
  do {
    best = std::min(best, suffix_fit_cost(g, order, y));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// -1 empty, +1 complete, 0 mixed. Disjoint nonempty sets only.
inline int pair_relation(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long long edges = 0;
  for (int u : a)
    for (int v : b)
      if (g.has_edge(u, v)) ++edges;
  if (edges == 0) return -1;
  if (edges == (long long)a.size() * b.size()) return 1;
  return 0;
}

inline bool homogeneous(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) return true;
  return pair_relation(g, a, b) != 0;
}

inline long long deficiency(const Graph& g, const Partition& p) {
  long long total = 0;
  for (int i = 0; i < p.block_count(); ++i)
    for (int j = i + 1; j < p.block_count(); ++j)
      if (!homogeneous(g, p.blocks[(std::size_t)i], p.blocks[(std::size_t)j]))
        total += (long long)p.blocks[(std::size_t)i].size() * p.blocks[(std::size_t)j].size();
  return total;
}

inline long long d2(const Graph& g, const VertexSet& x, int y) {
  std::vector<int> hood;
  for (int v : x)
    if (g.has_edge(v, y)) hood.push_back(v);
  long long total = 0;
  for (std::size_t i = 0; i < hood.size(); ++i)
    for (std::size_t j = i + 1; j < hood.size(); ++j)
      if (!g.has_edge(hood[i], hood[j])) ++total;
  return total;
}

// Minimum toggles over all vertex pairs until `good` accepts, breadth-first
// by edit size. Exponential; n <= 6 territory.
inline int edit_distance(const Graph& g, const std::function<bool(const Graph&)>& good,
                         int cap = 8) {
  if (good(g)) return 0;
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (int size = 1; size <= cap; ++size) {
    bool found = false;
    for_each_subset((int)pairs.size(), size, [&](const std::vector<int>& pick) {
      if (found) return;
      Graph h = g;
      for (int p : pick) h.toggle_edge(pairs[(std::size_t)p].first, pairs[(std::size_t)p].second);
      if (good(h)) found = true;
    });
    if (found) return size;
  }
  return cap + 1;
}

}  // namespace oracle

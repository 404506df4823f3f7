#pragma once

// Seeded instance generators shared by the unit and acceptance suites.

#include <algorithm>
#include <cassert>
#include <vector>

#include "c4lab/graph.hpp"
#include "c4lab/m2free.hpp"
#include "c4lab/partition.hpp"
#include "c4lab/rng.hpp"

namespace corpus {

using c4lab::BipartitePair;
using c4lab::CliqueSystem;
using c4lab::Graph;
using c4lab::Rational;
using c4lab::Rng;
using c4lab::VertexSet;

inline VertexSet range_set(int lo, int hi) {  // [lo, hi)
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return VertexSet(v);
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

// X = [0, m), Y = [m, 2m), vertex i adjacent to the first i+1 of Y.
inline Graph half_graph(int m) {
  Graph g(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) g.add_edge(i, m + j);
  return g;
}

struct PairInstance {
  Graph g;
  BipartitePair p;
};

// Random cross edges between X = [0, nx) and Y = [nx, nx + ny); optionally
// also random edges inside the sides, which everything M2 ignores.
inline PairInstance random_pair(int nx, int ny, const Rational& p_cross, Rng& rng,
                                bool inside_noise = false) {
  Graph g(nx + ny);
  for (int u = 0; u < nx; ++u)
    for (int v = nx; v < nx + ny; ++v)
      if (rng.chance(p_cross)) g.add_edge(u, v);
  if (inside_noise) {
    for (int u = 0; u < nx; ++u)
      for (int v = u + 1; v < nx; ++v)
        if (rng.chance(Rational(1, 4))) g.add_edge(u, v);
    for (int u = nx; u < nx + ny; ++u)
      for (int v = u + 1; v < nx + ny; ++v)
        if (rng.chance(Rational(1, 4))) g.add_edge(u, v);
  }
  return {g, {range_set(0, nx), range_set(nx, nx + ny)}};
}

// Clique on [0, h), independent rest, random cross edges. Split graphs have
// no induced C4: such a cycle needs two disjoint non-adjacent pairs and the
// clique side can host at most one vertex of each.
inline Graph random_split(int n, const Rational& p_cross, Rng& rng) {
  int h = (n + 1) / 2;
  Graph g(n);
  for (int u = 0; u < h; ++u)
    for (int v = u + 1; v < h; ++v) g.add_edge(u, v);
  for (int u = 0; u < h; ++u)
    for (int v = h; v < n; ++v)
      if (rng.chance(p_cross)) g.add_edge(u, v);
  return g;
}

// Every vertex's earlier neighbourhood is a clique at insertion, so reading
// the order backwards is a perfect elimination order.
inline Graph random_chordal(int n, Rng& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    int u = (int)rng.below((std::uint64_t)v);
    std::vector<int> clique = {u};
    std::vector<int> candidates;
    for (int w = 0; w < v; ++w)
      if (w != u && g.has_edge(u, w)) candidates.push_back(w);
    rng.shuffle(candidates);
    for (int w : candidates) {
      bool ok = true;
      for (int c : clique)
        if (!g.has_edge(c, w)) ok = false;
      if (ok && rng.chance(Rational(1, 2))) clique.push_back(w);
    }
    for (int c : clique) g.add_edge(std::min(c, v), std::max(c, v));
  }
  return g;
}

struct SystemInstance {
  Graph g;
  CliqueSystem sys;
};

// k vertex-disjoint cliques; each unordered pair of cliques gets a random
// staircase cross graph (each left vertex a random prefix of the right side),
// whose nested neighbourhoods leave no induced M2.
inline SystemInstance random_clique_system(int k, int max_block, Rng& rng) {
  std::vector<int> sizes;
  int n = 0;
  for (int i = 0; i < k; ++i) {
    int s = (int)rng.int_in(1, max_block);
    sizes.push_back(s);
    n += s;
  }
  Graph g(n);
  std::vector<VertexSet> cliques;
  int at = 0;
  for (int s : sizes) {
    for (int u = at; u < at + s; ++u)
      for (int v = u + 1; v < at + s; ++v) g.add_edge(u, v);
    cliques.push_back(range_set(at, at + s));
    at += s;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int u : cliques[(std::size_t)i]) {
        int level = (int)rng.int_in(0, cliques[(std::size_t)j].size());
        for (int t = 0; t < level; ++t) g.add_edge(u, cliques[(std::size_t)j][t]);
      }
  return {g, {cliques}};
}

struct IndsetInstance {
  Graph g;
  VertexSet x, y;
};

// X spans a split graph (C4-free) or a chordal graph; Y is independent with
// random cross edges into X.
inline IndsetInstance random_indset_instance(int nx, int ny, bool chordal_x, Rng& rng) {
  Graph base = chordal_x ? random_chordal(nx, rng) : random_split(nx, Rational(1, 2), rng);
  Graph g(nx + ny);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  for (int u = 0; u < nx; ++u)
    for (int v = nx; v < nx + ny; ++v)
      if (rng.chance(Rational(1, 2))) g.add_edge(u, v);
  return {g, range_set(0, nx), range_set(nx, nx + ny)};
}

}  // namespace corpus

#include "c4lab/lowerbound.hpp"

#include <algorithm>

namespace c4lab {

Rational blowup_epsilon(int k) {
  if (k < 3) throw PreconditionError("cycle length below 3");
  return Rational(1, 2LL * k * k);
}

long long blowup_edge_count(const BlowupSpec& spec) {
  long long k = spec.k, f = spec.f;
  return k * (f * (f - 1) / 2) + k * f * f;
}

Blowup blowup_cycle(const BlowupSpec& spec) {
  if (spec.k < 3) throw PreconditionError("cycle length below 3");
  if (spec.f < 1) throw PreconditionError("part size below 1");
  int k = spec.k, f = spec.f;
  Blowup b;
  b.spec = spec;
  b.graph = Graph(k * f);
  for (int i = 0; i < k; ++i) {
    std::vector<int> part;
    for (int t = 0; t < f; ++t) part.push_back(i * f + t);
    b.parts.emplace_back(part);
  }
  for (int u = 0; u < k * f; ++u)
    for (int v = u + 1; v < k * f; ++v) {
      int pu = u / f, pv = v / f;
      int gap = (pv - pu) % k;
      if (pu == pv || gap == 1 || gap == k - 1) b.graph.add_edge(u, v);
    }
  // k = 3 degenerates to a complete graph; the formula still matches because
  // every part pair is consecutive.
  detail::require(b.graph.edge_count() == blowup_edge_count(spec),
                  "blow-up edge count disagrees with the formula");
  return b;
}

ShortCycleScan verify_no_short_induced_cycles(const Blowup& b, const ExactCaps& caps) {
  ShortCycleScan out;
  for (int l = 4; l < b.spec.k; ++l) {
    auto cycle = find_induced_cl(b.graph, l, caps);
    if (cycle) {
      out.clean = false;
      out.length = l;
      out.cycle = cycle;
      return out;
    }
  }
  return out;
}

TransversalHypergraph transversal_cycle_hypergraph(const Graph& g,
                                                   const std::vector<VertexSet>& parts) {
  if (parts.empty()) throw PreconditionError("no parts");
  {
    VertexSet all;
    long long total = 0;
    for (const VertexSet& p : parts) {
      all = all.unite(p);
      total += p.size();
    }
    if (total != g.vertex_count() || all.size() != g.vertex_count())
      throw PreconditionError("parts do not partition the vertices");
  }
  int k = (int)parts.size();
  TransversalHypergraph h;
  h.parts = parts;
  std::vector<int> idx((std::size_t)k, 0);
  std::vector<int> tuple((std::size_t)k, 0);
  while (true) {
    for (int i = 0; i < k; ++i) tuple[(std::size_t)i] = parts[(std::size_t)i][idx[(std::size_t)i]];
    if (induces_cycle(g, tuple)) h.edges.push_back(tuple);
    int pos = k - 1;
    while (pos >= 0 && idx[(std::size_t)pos] + 1 == parts[(std::size_t)pos].size()) {
      idx[(std::size_t)pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[(std::size_t)pos];
  }
  return h;
}

namespace {

long long pow_ll(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    detail::require(r <= (long long)4e18 / std::max<long long>(base, 1), "power overflow");
    r *= base;
  }
  return r;
}

}  // namespace

DestructionScan exhaustive_single_edit_destruction(const Blowup& b) {
  DestructionScan out;
  out.base = (long long)transversal_cycle_hypergraph(b.graph, b.parts).edges.size();
  out.per_edit_bound = pow_ll(b.spec.f, b.spec.k - 2);
  Graph h = b.graph;
  int n = h.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      h.toggle_edge(u, v);
      long long after = (long long)transversal_cycle_hypergraph(h, b.parts).edges.size();
      h.toggle_edge(u, v);
      long long destroyed = out.base - after;  // negative when the edit creates cycles
      if (destroyed > out.worst_destroyed) {
        out.worst_destroyed = destroyed;
        out.worst_pair = {u, v};
      }
    }
  out.within_bound = out.worst_destroyed <= out.per_edit_bound;
  return out;
}

ResilienceResult edit_resilience_check(const BlowupSpec& spec, int m, Rng& rng, int trials) {
  Blowup b = blowup_cycle(spec);
  ResilienceResult out;
  out.trials = trials;
  out.base = (long long)transversal_cycle_hypergraph(b.graph, b.parts).edges.size();
  long long per_edit = pow_ll(spec.f, spec.k - 2);
  out.floor = out.base - (long long)m * per_edit;
  if (!((long long)m * per_edit < pow_ll(spec.f, spec.k)))
    throw PreconditionError("edit budget m must stay below f^2");
  out.worst = out.base;
  int n = b.graph.vertex_count();
  long long all_pairs = (long long)n * (n - 1) / 2;
  if (m > all_pairs) throw PreconditionError("more edits than vertex pairs");
  for (int t = 0; t < trials; ++t) {
    // m distinct pairs, sampled by index into the pair triangle.
    std::vector<int> picks = rng.sample_without_replacement((int)all_pairs, m);
    Graph h = b.graph;
    EditSet es;
    for (int p : picks) {
      int u = 0;
      long long rest = p;
      while (rest >= n - 1 - u) {
        rest -= n - 1 - u;
        ++u;
      }
      int v = u + 1 + (int)rest;
      es.add(u, v, h.has_edge(u, v) ? EditKind::Delete : EditKind::Add);
      h.toggle_edge(u, v);
    }
    long long count = (long long)transversal_cycle_hypergraph(h, b.parts).edges.size();
    if (count < out.worst) out.worst = count;
    if (count < out.floor) {
      out.ok = false;
      out.violating = es;
      return out;
    }
  }
  return out;
}

std::optional<std::vector<VertexSet>> find_complete_kpartite_subhypergraph(
    const TransversalHypergraph& h, int f) {
  int k = (int)h.parts.size();
  if (k > 6 || f > 2) throw BudgetError("subhypergraph search capped at 6 parts and f = 2");
  if (f < 1) throw PreconditionError("f below 1");
  for (const VertexSet& p : h.parts)
    if (p.size() < f) return std::nullopt;

  std::vector<std::vector<int>> sorted_edges = h.edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  auto has_edge = [&](const std::vector<int>& e) {
    return std::binary_search(sorted_edges.begin(), sorted_edges.end(), e);
  };

  // One f-subset choice per part, odometer over subsets, then over transversals.
  std::vector<std::vector<std::vector<int>>> choices((std::size_t)k);
  for (int i = 0; i < k; ++i) {
    const VertexSet& p = h.parts[(std::size_t)i];
    std::vector<int> sel((std::size_t)f);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == f) {
        choices[(std::size_t)i].push_back(sel);
        return;
      }
      for (int t = start; t < p.size(); ++t) {
        sel[(std::size_t)depth] = p[t];
        rec(t + 1, depth + 1);
      }
    };
    rec(0, 0);
  }

  std::vector<std::size_t> pick((std::size_t)k, 0);
  while (true) {
    bool all_present = true;
    std::vector<std::size_t> t((std::size_t)k, 0);
    while (all_present) {
      std::vector<int> e((std::size_t)k);
      for (int i = 0; i < k; ++i) e[(std::size_t)i] = choices[(std::size_t)i][pick[(std::size_t)i]][t[(std::size_t)i]];
      if (!has_edge(e)) all_present = false;
      int pos = k - 1;
      while (pos >= 0 && t[(std::size_t)pos] + 1 == (std::size_t)f) {
        t[(std::size_t)pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++t[(std::size_t)pos];
    }
    if (all_present) {
      std::vector<VertexSet> out;
      for (int i = 0; i < k; ++i) out.emplace_back(choices[(std::size_t)i][pick[(std::size_t)i]]);
      return out;
    }
    int pos = k - 1;
    while (pos >= 0 && pick[(std::size_t)pos] + 1 == choices[(std::size_t)pos].size()) {
      pick[(std::size_t)pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[(std::size_t)pos];
  }
  return std::nullopt;
}

HardFamily build_hard_family(const std::function<int(const Rational&)>& g_table, int k_min,
                             int k_max) {
  if (k_min < 5) throw PreconditionError("family blow-ups start at k = 5");
  if (k_max < k_min) throw PreconditionError("empty k range");
  HardFamily fam;
  fam.c4 = Graph(4);
  fam.c4.add_edge(0, 1);
  fam.c4.add_edge(1, 2);
  fam.c4.add_edge(2, 3);
  fam.c4.add_edge(0, 3);
  for (int k = k_min; k <= k_max; ++k) {
    Rational eps = blowup_epsilon(k);
    int f = g_table(eps);
    if (f < 1) throw PreconditionError("g table must be positive");
    Blowup b = blowup_cycle({k, f});
    fam.members.push_back(HardFamilyMember{k, f, eps, std::move(b.graph)});
  }
  return fam;
}

}  // namespace c4lab

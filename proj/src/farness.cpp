#include "c4lab/farness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace c4lab {

const char* target_property_name(TargetProperty p) {
  return p == TargetProperty::C4Free ? "induced-c4-free" : "chordal";
}

bool satisfies_property(const Graph& g, TargetProperty p) {
  if (p == TargetProperty::C4Free) return !find_induced_c4(g).has_value();
  return find_induced_cycle_geq4(g).chordal;
}

std::optional<std::vector<int>> find_property_witness(const Graph& g, TargetProperty p) {
  if (p == TargetProperty::C4Free) {
    auto c4 = find_induced_c4(g);
    if (!c4) return std::nullopt;
    return std::vector<int>{(*c4)[0], (*c4)[1], (*c4)[2], (*c4)[3]};
  }
  ChordalityResult r = find_induced_cycle_geq4(g);
  if (r.chordal) return std::nullopt;
  return r.cycle;
}

// ---- packing ------------------------------------------------------------------

PackingResult packing_lower_bound(const Graph& g, TargetProperty prop, const ExactCaps& caps) {
  int max_len = prop == TargetProperty::C4Free ? 4 : std::min(caps.max_cycle_len, g.vertex_count());
  std::vector<std::vector<int>> candidates;
  for (int l = 4; l <= max_len && l <= g.vertex_count(); ++l)
    for_each_induced_cl(
        g, l, [&](const std::vector<int>& cycle) { candidates.push_back(cycle); }, caps);
  // (length, sorted vertex set) order; enumeration order is per-anchor.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     std::vector<int> sa = a, sb = b;
                     std::sort(sa.begin(), sa.end());
                     std::sort(sb.begin(), sb.end());
                     return sa < sb;
                   });

  PackingResult out;
  std::set<std::pair<int, int>> used;
  for (const auto& cycle : candidates) {
    std::vector<int> s = cycle;
    std::sort(s.begin(), s.end());
    bool clash = false;
    for (std::size_t i = 0; i < s.size() && !clash; ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (used.count({s[i], s[j]})) {
          clash = true;
          break;
        }
    if (clash) continue;
    detail::require(induces_cycle(g, cycle), "packing witness is not an induced cycle");
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) used.insert({s[i], s[j]});
    out.witnesses.push_back(cycle);
  }
  out.count = (int)out.witnesses.size();
  return out;
}

// ---- exact distance ------------------------------------------------------------

std::optional<ExactDistanceResult> exact_edit_distance(const Graph& g, TargetProperty prop,
                                                       int budget, int exact_n_cap) {
  if (budget < 0) throw PreconditionError("negative edit budget");
  if (g.vertex_count() > exact_n_cap && budget > 8)
    throw BudgetError("exact edit distance needs n <= " + std::to_string(exact_n_cap) +
                      " or budget <= 8");
  Graph h = g;
  std::vector<std::pair<int, int>> path;

  // Any edit set reaching the property toggles a pair inside every violating
  // cycle of the current graph, so branching over one witness's pairs is
  // complete. Re-toggling a path pair never helps a set-valued solution.
  std::function<bool(int)> dfs = [&](int remaining) -> bool {
    auto w = find_property_witness(h, prop);
    if (!w) return true;
    if (remaining == 0) return false;
    std::vector<int> s = *w;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        std::pair<int, int> pr{s[i], s[j]};
        if (std::find(path.begin(), path.end(), pr) != path.end()) continue;
        h.toggle_edge(pr.first, pr.second);
        path.push_back(pr);
        if (dfs(remaining - 1)) return true;
        path.pop_back();
        h.toggle_edge(pr.first, pr.second);
      }
    return false;
  };

  for (int depth = 0; depth <= budget; ++depth) {
    if (dfs(depth)) {
      ExactDistanceResult out;
      out.distance = (int)path.size();
      for (auto [u, v] : path)
        out.edits.add(u, v, g.has_edge(u, v) ? EditKind::Delete : EditKind::Add);
      detail::require(satisfies_property(apply_edits(g, out.edits), prop),
                      "exact search emitted a non-solution");
      return out;
    }
    detail::require(path.empty(), "search stack not unwound");
  }
  return std::nullopt;
}

// ---- heuristic upper bounds --------------------------------------------------------

namespace {

VertexSet some_large_clique(const Graph& g) {
  if (g.vertex_count() <= 64) return max_clique(g).witness;
  // Degree-greedy fallback where exact search is unreasonable.
  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[(std::size_t)i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return VertexSet(clique);
}

// Split shape: keep a clique, make everything outside it independent. Split
// graphs are chordal and have no induced C4 (an induced C4 would need two
// non-adjacent vertices in the clique or two adjacent ones outside).
UpperBoundResult flatten_outside_clique(const Graph& g, TargetProperty prop) {
  VertexSet k = some_large_clique(g);
  Graph h = g;
  for (auto [u, v] : g.edges())
    if (!k.contains(u) && !k.contains(v)) h.remove_edge(u, v);
  UpperBoundResult out;
  out.edits = EditSet::diff(g, h);
  out.count = out.edits.size();
  out.strategy = "split-flatten";
  check_bound(satisfies_property(h, prop), "split flattening left a violation");
  return out;
}

// Eliminates vertices in fill-greedy order, adding the fill edges; the result
// has a perfect elimination ordering by construction.
UpperBoundResult greedy_fill_in(const Graph& g) {
  Graph h = g;
  std::vector<bool> alive((std::size_t)g.vertex_count(), true);
  for (int step = 0; step < g.vertex_count(); ++step) {
    int best = -1;
    long long best_fill = -1;
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (!alive[(std::size_t)v]) continue;
      std::vector<int> nb;
      for (int u : h.neighbors(v))
        if (alive[(std::size_t)u]) nb.push_back(u);
      long long fill = 0;
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) fill += !h.has_edge(nb[i], nb[j]);
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<int> nb;
    for (int u : h.neighbors(best))
      if (alive[(std::size_t)u]) nb.push_back(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!h.has_edge(nb[i], nb[j])) h.add_edge(nb[i], nb[j]);
    alive[(std::size_t)best] = false;
  }
  UpperBoundResult out;
  out.edits = EditSet::diff(g, h);
  out.count = out.edits.size();
  out.strategy = "greedy-fill-in";
  check_bound(find_induced_cycle_geq4(h).chordal, "fill-in result is not chordal");
  return out;
}

// Kills one induced C4 per round, choosing the toggle that minimizes the
// remaining exact count. May stall; callers fall back to flattening.
std::optional<UpperBoundResult> greedy_c4_elimination(const Graph& g) {
  if (g.vertex_count() > 48) return std::nullopt;
  Graph h = g;
  long long rounds_left = 4LL * g.vertex_count() * g.vertex_count() + 8;
  while (rounds_left-- > 0) {
    auto w = find_induced_c4(h);
    if (!w) {
      UpperBoundResult out;
      out.edits = EditSet::diff(g, h);
      out.count = out.edits.size();
      out.strategy = "greedy-c4-elimination";
      return out;
    }
    std::vector<int> s{(*w)[0], (*w)[1], (*w)[2], (*w)[3]};
    std::sort(s.begin(), s.end());
    long long best_count = -1;
    std::pair<int, int> best{-1, -1};
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        h.toggle_edge(s[i], s[j]);
        long long c = count_induced_c4(h);
        h.toggle_edge(s[i], s[j]);
        if (best_count < 0 || c < best_count) {
          best_count = c;
          best = {s[i], s[j]};
        }
      }
    h.toggle_edge(best.first, best.second);
  }
  return std::nullopt;
}

}  // namespace

UpperBoundResult heuristic_upper_bound(const Graph& g, TargetProperty prop) {
  std::vector<UpperBoundResult> options;
  if (satisfies_property(g, prop)) {
    UpperBoundResult out;
    out.strategy = "already-satisfying";
    return out;
  }
  if (prop == TargetProperty::C4Free) {
    if (auto r = greedy_c4_elimination(g)) options.push_back(std::move(*r));
  } else {
    options.push_back(greedy_fill_in(g));
  }
  options.push_back(flatten_outside_clique(g, prop));
  std::size_t best = 0;
  for (std::size_t i = 1; i < options.size(); ++i)
    if (options[i].count < options[best].count) best = i;
  UpperBoundResult chosen = options[best];
  check_bound(satisfies_property(apply_edits(g, chosen.edits), prop),
              "upper bound edit set fails the recognizer");
  return chosen;
}

FarnessCertificate farness_certificate(const Graph& g, TargetProperty prop, int exact_n_cap,
                                       int fallback_budget) {
  FarnessCertificate c;
  ExactCaps caps;
  if (prop == TargetProperty::C4Free) {
    caps.max_cycle_len = 4;
    caps.max_n = 128;
  }
  c.packing = packing_lower_bound(g, prop, caps);
  c.lower = c.packing.count;
  c.upper_result = heuristic_upper_bound(g, prop);
  c.upper = c.upper_result.count;
  bool small_n = g.vertex_count() <= exact_n_cap;
  bool small_budget = g.vertex_count() <= 64 && c.upper <= std::min(fallback_budget, 8);
  if (small_n || small_budget) {
    c.exact_result = exact_edit_distance(g, prop, c.upper, exact_n_cap);
    detail::require(c.exact_result.has_value(), "deepening to the upper bound cannot miss");
    c.exact = c.exact_result->distance;
    check_bound(c.lower <= *c.exact && *c.exact <= c.upper,
                "certificate ordering lower <= exact <= upper failed");
  } else {
    check_bound(c.lower <= c.upper, "packing lower bound exceeded the verified upper bound");
  }
  return c;
}

}  // namespace c4lab

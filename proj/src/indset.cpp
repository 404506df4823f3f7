#include "c4lab/indset.hpp"

#include <algorithm>
#include <bit>

namespace c4lab {

namespace {

std::vector<int> cross_neighborhood(const Graph& g, const VertexSet& x, int y) {
  std::vector<int> n;
  for (int v : x)
    if (g.has_edge(y, v)) n.push_back(v);
  return n;
}

AntiMatching greedy_antimatching(const Graph& g, int y, const std::vector<int>& hood) {
  AntiMatching am;
  am.owner = y;
  std::vector<bool> used(hood.size(), false);
  for (std::size_t i = 0; i < hood.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < hood.size(); ++j) {
      if (used[j] || g.has_edge(hood[i], hood[j])) continue;
      used[i] = used[j] = true;
      am.pairs.emplace_back(std::min(hood[i], hood[j]), std::max(hood[i], hood[j]));
      break;
    }
  }
  return am;
}

}  // namespace

void verify_antimatching(const Graph& g, const VertexSet& x, const AntiMatching& am) {
  if (x.contains(am.owner)) throw PreconditionError("anti-matching owner lies in x", {am.owner});
  std::vector<int> touched;
  for (auto [u, v] : am.pairs) {
    if (!x.contains(u) || !x.contains(v))
      throw PreconditionError("anti-matching pair leaves x", {u, v});
    if (!g.has_edge(am.owner, u) || !g.has_edge(am.owner, v))
      throw PreconditionError("anti-matching pair not in the owner's neighbourhood", {u, v});
    if (g.has_edge(u, v)) throw PreconditionError("anti-matching pair is an edge", {u, v});
    touched.push_back(u);
    touched.push_back(v);
  }
  std::sort(touched.begin(), touched.end());
  if (std::adjacent_find(touched.begin(), touched.end()) != touched.end())
    throw PreconditionError("anti-matching pairs share a vertex");
  VertexSet used{touched};
  std::vector<int> hood = cross_neighborhood(g, x, am.owner);
  for (std::size_t i = 0; i < hood.size(); ++i)
    for (std::size_t j = i + 1; j < hood.size(); ++j)
      if (!g.has_edge(hood[i], hood[j]) && !used.contains(hood[i]) && !used.contains(hood[j]))
        throw PreconditionError("anti-matching not maximal", {hood[i], hood[j]});
}

AntiMatching maximal_antimatching(const Graph& g, const VertexSet& x, int y) {
  if (x.contains(y)) throw PreconditionError("y lies in x", {y});
  return greedy_antimatching(g, y, cross_neighborhood(g, x, y));
}

AntiMatching maximal_antimatching_shuffled(const Graph& g, const VertexSet& x, int y, Rng& rng) {
  if (x.contains(y)) throw PreconditionError("y lies in x", {y});
  std::vector<int> hood = cross_neighborhood(g, x, y);
  rng.shuffle(hood);
  AntiMatching am = greedy_antimatching(g, y, hood);
  for (auto& [u, v] : am.pairs)
    if (u > v) std::swap(u, v);
  std::sort(am.pairs.begin(), am.pairs.end());
  return am;
}

long long d2(const Graph& g, const VertexSet& x, int y) {
  if (x.contains(y)) throw PreconditionError("y lies in x", {y});
  std::vector<int> hood = cross_neighborhood(g, x, y);
  long long non = 0;
  for (std::size_t i = 0; i < hood.size(); ++i)
    for (std::size_t j = i + 1; j < hood.size(); ++j) non += !g.has_edge(hood[i], hood[j]);
  return non;
}

bool FamilyDescriptor::is_free(const Graph& g) const {
  switch (kind) {
    case FamilyKind::C4Only:
      return count_induced_c4(g) == 0;
    case FamilyKind::ChordalFamily:
      return find_induced_cycle_geq4(g).chordal;
  }
  return false;
}

std::optional<std::vector<int>> FamilyDescriptor::find_violation(const Graph& g) const {
  switch (kind) {
    case FamilyKind::C4Only: {
      auto c4 = find_induced_c4(g);
      if (!c4) return std::nullopt;
      return std::vector<int>{(*c4)[0], (*c4)[1], (*c4)[2], (*c4)[3]};
    }
    case FamilyKind::ChordalFamily: {
      ChordalityResult r = find_induced_cycle_geq4(g);
      if (r.chordal) return std::nullopt;
      return r.cycle;
    }
  }
  return std::nullopt;
}

const char* FamilyDescriptor::name() const {
  return kind == FamilyKind::C4Only ? "c4-only" : "chordal-family";
}

bool neighborhoods_never_cliques(const Graph& member) {
  for (int v = 0; v < member.vertex_count(); ++v) {
    std::vector<int> nb = member.neighbors(v);
    bool has_nonedge = false;
    for (std::size_t i = 0; i < nb.size() && !has_nonedge; ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!member.has_edge(nb[i], nb[j])) {
          has_nonedge = true;
          break;
        }
    if (!has_nonedge) return false;  // clique neighbourhood (empty one included)
  }
  return true;
}

IndsetEditResult indset_edit(const Graph& g, const VertexSet& x, const VertexSet& y,
                             const FamilyDescriptor& fam, Rng* shuffle_rng) {
  if (x.intersects(y)) throw PreconditionError("x and y overlap");
  if (x.size() + y.size() != g.vertex_count())
    throw PreconditionError("x and y must cover all vertices");
  for (int i = 0; i < y.size(); ++i)
    for (int j = i + 1; j < y.size(); ++j)
      if (g.has_edge(y[i], y[j]))
        throw PreconditionError("y is not independent", {y[i], y[j]});
  {
    Graph gx = induced_subgraph(g, x);
    if (auto viol = fam.find_violation(gx)) {
      std::vector<int> host;
      for (int v : *viol) host.push_back(x[v]);
      throw PreconditionError("x side is not free of the family", host);
    }
  }

  IndsetEditResult out;
  out.edited = g;
  long long total_pairs = 0;
  for (int yv : y) {
    AntiMatching am = shuffle_rng ? maximal_antimatching_shuffled(g, x, yv, *shuffle_rng)
                                  : maximal_antimatching(g, x, yv);
    verify_antimatching(g, x, am);
    long long m = am.size();
    check_bound(2 * d2(g, x, yv) >= m * m, "d2 fell below half the squared anti-matching size");
    for (auto [u, v] : am.pairs) {
      out.edited.remove_edge(yv, u);
      out.edited.remove_edge(yv, v);
      out.edits.add(std::min(yv, u), std::max(yv, u), EditKind::Delete);
      out.edits.add(std::min(yv, v), std::max(yv, v), EditKind::Delete);
    }
    total_pairs += m;
    out.antimatchings.push_back(std::move(am));
  }
  check_bound(out.edits.size() == 2 * total_pairs, "edit count is not twice the pair total");
  check_bound(fam.is_free(out.edited), "edited graph still contains a family member");
  return out;
}

C4LowerBoundCertificate c4_lower_bound_certificate(const Graph& g, const VertexSet& x,
                                                   const VertexSet& y) {
  if (x.intersects(y)) throw PreconditionError("x and y overlap");
  for (int i = 0; i < y.size(); ++i)
    for (int j = i + 1; j < y.size(); ++j)
      if (g.has_edge(y[i], y[j]))
        throw PreconditionError("y is not independent", {y[i], y[j]});

  C4LowerBoundCertificate out;
  std::vector<std::uint64_t> ymask = set_mask(g, y);
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) {
      int u = x[i], v = x[j];
      if (g.has_edge(u, v)) continue;
      std::vector<int> common;
      for (int w = 0; w < g.words(); ++w) {
        std::uint64_t bits = g.row(u)[w] & g.row(v)[w] & ymask[(std::size_t)w];
        while (bits) {
          int b = std::countr_zero(bits);
          bits &= bits - 1;
          common.push_back(w * 64 + b);
        }
      }
      long long t = (long long)common.size();
      out.t_sum += t;
      out.certified_count += t * (t - 1) / 2;
      // Each counted quadruple really is an induced C4.
      for (std::size_t a = 0; a < common.size(); ++a)
        for (std::size_t b = a + 1; b < common.size(); ++b)
          detail::require(induces_cycle(g, {u, common[a], v, common[b]}),
                          "certificate quadruple is not an induced C4");
    }

  long long b = (long long)x.size() * (x.size() - 1) / 2;
  if (b > 0 && out.t_sum > b)
    out.jensen_bound = Rational(out.t_sum) * Rational(out.t_sum - b) / Rational(2 * b);
  check_bound(Rational(out.certified_count) >= out.jensen_bound,
              "certified count fell below its Jensen relaxation");
  return out;
}

}  // namespace c4lab

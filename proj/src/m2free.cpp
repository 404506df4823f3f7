#include "c4lab/m2free.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace c4lab {

void validate_pair(const Graph& g, const BipartitePair& p) {
  if (p.x.intersects(p.y)) throw PreconditionError("bipartite pair sides overlap");
  for (int v : p.x)
    if (v >= g.vertex_count()) throw std::out_of_range("pair member outside host graph");
  for (int v : p.y)
    if (v >= g.vertex_count()) throw std::out_of_range("pair member outside host graph");
}

bool verify_m2_witness(const Graph& g, const BipartitePair& p, const M2Witness& w) {
  if (!p.x.contains(w.x1) || !p.x.contains(w.x2)) return false;
  if (!p.y.contains(w.y1) || !p.y.contains(w.y2)) return false;
  if (w.x1 == w.x2 || w.y1 == w.y2) return false;
  return g.has_edge(w.x1, w.y1) && g.has_edge(w.x2, w.y2) && !g.has_edge(w.x1, w.y2) &&
         !g.has_edge(w.x2, w.y1);
}

std::optional<M2Witness> find_induced_m2(const Graph& g, const BipartitePair& p) {
  validate_pair(g, p);
  for (int i = 0; i < p.x.size(); ++i)
    for (int j = i + 1; j < p.x.size(); ++j) {
      int x1 = p.x[i], x2 = p.x[j];
      for (int a = 0; a < p.y.size(); ++a)
        for (int b = 0; b < p.y.size(); ++b) {
          if (a == b) continue;
          int y1 = p.y[a], y2 = p.y[b];
          if (g.has_edge(x1, y1) && g.has_edge(x2, y2) && !g.has_edge(x1, y2) &&
              !g.has_edge(x2, y1)) {
            M2Witness w{x1, y1, x2, y2};
            assert(verify_m2_witness(g, p, w));
            return w;
          }
        }
    }
  return std::nullopt;
}

namespace {

// Cross neighborhood of x inside Y, as a mask over Y positions.
std::vector<std::uint64_t> y_neighborhood(const Graph& g, int x, const VertexSet& y) {
  std::vector<std::uint64_t> mask((std::size_t)(y.size() + 63) / 64, 0);
  for (int i = 0; i < y.size(); ++i)
    if (g.has_edge(x, y[i])) mask[(std::size_t)(i >> 6)] |= 1ULL << (i & 63);
  return mask;
}

int mask_popcount(const std::vector<std::uint64_t>& m) {
  int c = 0;
  for (auto w : m) c += std::popcount(w);
  return c;
}

bool mask_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

int first_in(const std::vector<std::uint64_t>& m) {
  for (std::size_t w = 0; w < m.size(); ++w)
    if (m[w]) return (int)(w * 64) + std::countr_zero(m[w]);
  return -1;
}

}  // namespace

std::variant<NestedOrder, M2Witness> nested_order(const Graph& g, const BipartitePair& p) {
  validate_pair(g, p);
  int m = p.x.size();
  std::vector<std::vector<std::uint64_t>> nbr((std::size_t)m);
  std::vector<int> deg((std::size_t)m);
  for (int i = 0; i < m; ++i) {
    nbr[(std::size_t)i] = y_neighborhood(g, p.x[i], p.y);
    deg[(std::size_t)i] = mask_popcount(nbr[(std::size_t)i]);
  }
  std::vector<int> idx((std::size_t)m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (deg[(std::size_t)a] != deg[(std::size_t)b]) return deg[(std::size_t)a] < deg[(std::size_t)b];
    return p.x[a] < p.x[b];
  });
  for (int t = 0; t + 1 < m; ++t) {
    int a = idx[(std::size_t)t], b = idx[(std::size_t)(t + 1)];
    if (mask_subset(nbr[(std::size_t)a], nbr[(std::size_t)b])) continue;
    // |N(a)| <= |N(b)| and N(a) not within N(b) forces witnesses both ways.
    std::vector<std::uint64_t> only_a = nbr[(std::size_t)a], only_b = nbr[(std::size_t)b];
    for (std::size_t w = 0; w < only_a.size(); ++w) {
      std::uint64_t both = nbr[(std::size_t)a][w] & nbr[(std::size_t)b][w];
      only_a[w] &= ~both;
      only_b[w] &= ~both;
    }
    int ya = first_in(only_a), yb = first_in(only_b);
    detail::require(ya >= 0 && yb >= 0, "incomparable neighborhoods without witness");
    M2Witness w{p.x[a], p.y[ya], p.x[b], p.y[yb]};
    assert(verify_m2_witness(g, p, w));
    return w;
  }
  NestedOrder out;
  out.order.reserve((std::size_t)m);
  for (int i : idx) out.order.push_back(p.x[i]);
  return out;
}

namespace {

// Interval index of position p (0-based) when m positions split into r blocks,
// larger blocks first.
int interval_block(int m, int r, int pos) {
  int base = m / r, rem = m % r;
  int big = rem * (base + 1);
  if (pos < big) return pos / (base + 1);
  return rem + (pos - big) / (base == 0 ? 1 : base);
}

}  // namespace

PairPartition homog_pair_partition(const Graph& g, const BipartitePair& p, int r) {
  if (r < 1) throw PreconditionError("block count must be positive");
  if (r > 1000000) throw BudgetError("pair partition block count above materialization cap");
  auto res = nested_order(g, p);
  if (std::holds_alternative<M2Witness>(res)) {
    const M2Witness& w = std::get<M2Witness>(res);
    throw PreconditionError("pair is not M2-free", {w.x1, w.y1, w.x2, w.y2});
  }
  const std::vector<int>& order = std::get<NestedOrder>(res).order;
  int m = (int)order.size();

  PairPartition out;
  out.x_blocks.assign((std::size_t)r, VertexSet{});
  {
    std::vector<std::vector<int>> buckets((std::size_t)r);
    for (int pos = 0; pos < m; ++pos)
      buckets[(std::size_t)interval_block(m, r, pos)].push_back(order[(std::size_t)pos]);
    for (int i = 0; i < r; ++i) out.x_blocks[(std::size_t)i] = VertexSet(buckets[(std::size_t)i]);
  }

  // y_blocks[i] collects Y vertices first reached by the top vertex of X block
  // i; vertices reached by no block land in y_blocks[r].
  std::vector<int> top((std::size_t)r, -1);
  {
    int pos = 0;
    for (int i = 0; i < r; ++i) {
      int sz = out.x_blocks[(std::size_t)i].size();
      if (sz > 0) top[(std::size_t)i] = order[(std::size_t)(pos + sz - 1)];
      pos += sz;
    }
  }
  std::vector<std::vector<int>> ybuckets((std::size_t)r + 1);
  for (int yv : p.y) {
    int blk = r;
    for (int i = 0; i < r; ++i) {
      if (top[(std::size_t)i] < 0) continue;
      if (g.has_edge(top[(std::size_t)i], yv)) {
        blk = i;
        break;
      }
    }
    ybuckets[(std::size_t)blk].push_back(yv);
  }
  out.y_blocks.reserve((std::size_t)r + 1);
  for (auto& b : ybuckets) out.y_blocks.emplace_back(b);
  return out;
}

long long count_induced_m2(const Graph& g, const BipartitePair& p) {
  validate_pair(g, p);
  long long total = 0;
  std::vector<std::vector<std::uint64_t>> nbr((std::size_t)p.x.size());
  for (int i = 0; i < p.x.size(); ++i)
    nbr[(std::size_t)i] = y_neighborhood(g, p.x[i], p.y);
  for (int i = 0; i < p.x.size(); ++i)
    for (int j = i + 1; j < p.x.size(); ++j) {
      int a = 0, b = 0;
      for (std::size_t w = 0; w < nbr[(std::size_t)i].size(); ++w) {
        a += std::popcount(nbr[(std::size_t)i][w] & ~nbr[(std::size_t)j][w]);
        b += std::popcount(nbr[(std::size_t)j][w] & ~nbr[(std::size_t)i][w]);
      }
      total += (long long)a * b;
    }
  return total;
}

namespace {

// Cost of re-fitting each y to its best suffix of `order`. Walking the suffix
// boundary from full X to empty changes each y's symmetric difference by one
// per step, so the scan is linear.
long long suffix_fit_cost(const Graph& g, const BipartitePair& p, const std::vector<int>& order,
                          EditSet* edits_out) {
  long long total = 0;
  int m = (int)order.size();
  for (int yi = 0; yi < p.y.size(); ++yi) {
    int yv = p.y[yi];
    int nbrs = 0;
    for (int xv : p.x)
      if (g.has_edge(xv, yv)) ++nbrs;
    // Start with the empty suffix: cost = |N(y)|.
    int cost = nbrs;
    int best_cost = cost, best_start = m;
    for (int start = m - 1; start >= 0; --start) {
      cost += g.has_edge(order[(std::size_t)start], yv) ? -1 : 1;
      if (cost < best_cost) {
        best_cost = cost;
        best_start = start;
      }
    }
    total += best_cost;
    if (edits_out) {
      for (int pos = 0; pos < m; ++pos) {
        int xv = order[(std::size_t)pos];
        bool want = pos >= best_start;
        bool have = g.has_edge(xv, yv);
        if (want != have)
          edits_out->add(std::min(xv, yv), std::max(xv, yv),
                         want ? EditKind::Add : EditKind::Delete);
      }
    }
  }
  return total;
}

}  // namespace

M2EditResult min_edits_to_m2free(const Graph& g, const BipartitePair& p, EditSearchMode mode,
                                 int exact_cap) {
  validate_pair(g, p);
  int m = p.x.size();
  std::vector<int> order(p.x.members());

  if (mode == EditSearchMode::Exact) {
    if (m > exact_cap)
      throw BudgetError("exact M2 edit search capped at |X| <= " + std::to_string(exact_cap));
    std::vector<int> best_order = order;
    long long best = -1;
    std::sort(order.begin(), order.end());
    do {
      long long cost = suffix_fit_cost(g, p, order, nullptr);
      if (best < 0 || cost < best) {
        best = cost;
        best_order = order;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    order = best_order;
  } else {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = 0, db = 0;
      for (int yv : p.y) {
        da += g.has_edge(a, yv);
        db += g.has_edge(b, yv);
      }
      return da != db ? da < db : a < b;
    });
  }

  EditSet edits;
  long long cost = suffix_fit_cost(g, p, order, &edits);
  detail::require(cost == edits.size(), "suffix fit cost mismatch");
  Graph edited = apply_edits(g, edits);
  detail::require(!find_induced_m2(edited, p).has_value(), "edited pair still has an M2");
  return M2EditResult{(int)cost, std::move(edits), mode};
}

}  // namespace c4lab

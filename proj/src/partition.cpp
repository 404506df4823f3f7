#include "c4lab/partition.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <sstream>

namespace c4lab {

// ---- Partition ---------------------------------------------------------------

Partition Partition::create(VertexSet ground, std::vector<VertexSet> blocks) {
  long long total = 0;
  for (const VertexSet& b : blocks) {
    total += b.size();
    if (!b.is_subset_of(ground)) throw PreconditionError("partition block outside ground set");
  }
  if (total != ground.size()) throw PreconditionError("partition blocks do not tile the ground set");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (blocks[i].intersects(blocks[j])) throw PreconditionError("partition blocks overlap");
  Partition p;
  p.ground = std::move(ground);
  p.blocks = std::move(blocks);
  return p;
}

int Partition::block_of(int v) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].contains(v)) return (int)i;
  return -1;
}

bool Partition::refines(const Partition& coarser) const {
  if (!(ground == coarser.ground)) return false;
  for (const VertexSet& b : blocks) {
    if (b.empty()) continue;
    int host = coarser.block_of(b[0]);
    if (host < 0 || !b.is_subset_of(coarser.blocks[(std::size_t)host])) return false;
  }
  return true;
}

bool Partition::is_equipartition() const {
  int lo = -1, hi = -1;
  for (const VertexSet& b : blocks) {
    int s = b.size();
    lo = lo < 0 ? s : std::min(lo, s);
    hi = hi < 0 ? s : std::max(hi, s);
  }
  return blocks.empty() || hi - lo <= 1;
}

HomogeneityLedger homogeneity_deficiency(const Graph& g, const Partition& p) {
  HomogeneityLedger ledger;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
      const VertexSet& u = p.blocks[i];
      const VertexSet& v = p.blocks[j];
      long long cross = 0;
      for (int a : u)
        for (int b : v) cross += g.has_edge(a, b);
      long long full = (long long)u.size() * v.size();
      if (cross != 0 && cross != full) {
        ledger.non_homog_pairs.emplace_back((int)i, (int)j);
        ledger.deficiency += full;
      }
    }
  return ledger;
}

// ---- clique systems ------------------------------------------------------------

VertexSet CliqueSystem::ground() const {
  VertexSet g;
  for (const VertexSet& c : cliques) g = g.unite(c);
  return g;
}

void validate_clique_system(const Graph& g, const CliqueSystem& sys) {
  long long total = 0;
  for (std::size_t i = 0; i < sys.cliques.size(); ++i) {
    total += sys.cliques[i].size();
    if (!is_clique(g, sys.cliques[i]))
      throw PreconditionError("block " + std::to_string(i) + " is not a clique");
    for (std::size_t j = i + 1; j < sys.cliques.size(); ++j) {
      if (sys.cliques[i].intersects(sys.cliques[j]))
        throw PreconditionError("clique blocks overlap");
      BipartitePair pair{sys.cliques[i], sys.cliques[j]};
      if (auto w = find_induced_m2(g, pair))
        throw PreconditionError("blocks " + std::to_string(i) + "," + std::to_string(j) +
                                    " have an induced M2",
                                {w->x1, w->y1, w->x2, w->y2});
    }
  }
  detail::require(total == sys.ground().size(), "clique system ground size mismatch");
}

// ---- pairwise split indices ------------------------------------------------------

namespace {

// ceil(1/delta), saturated at cap. The fine split's delta can be far below
// 1/int64 range, so the ceiling is taken on the unreduced fraction.
int ceil_inverse_saturated(const Rational& delta, int cap) {
  if (delta.num() <= 0) throw PreconditionError("delta must be positive");
  __int128 num = delta.num(), den = delta.den();
  __int128 r = (den + num - 1) / num;
  if (r > cap) return cap;
  return (int)r;
}

int interval_block(int m, int r, int pos) {
  int base = m / r, rem = m % r;
  int big = rem * (base + 1);
  if (pos < big) return pos / (base + 1);
  return rem + (pos - big) / (base == 0 ? 1 : base);
}

// For the ordered pair (xs, ys), computes each side's block index under the
// homogeneous pair split with r intervals: xs positions into intervals of the
// nested order, ys by the first interval endpoint that reaches them (index r
// when none does). Blocks beyond position m+1 stay empty, so r is clamped.
struct PairSplit {
  std::map<int, int> x_block;
  std::map<int, int> y_block;
  int r_x;  // interval count actually used on the X side
};

PairSplit split_pair(const Graph& g, const VertexSet& xs, const VertexSet& ys, int r_requested) {
  BipartitePair pair{xs, ys};
  auto res = nested_order(g, pair);
  if (std::holds_alternative<M2Witness>(res)) {
    const M2Witness& w = std::get<M2Witness>(res);
    throw PreconditionError("pair is not M2-free", {w.x1, w.y1, w.x2, w.y2});
  }
  const std::vector<int>& order = std::get<NestedOrder>(res).order;
  int m = (int)order.size();
  int r = std::min(r_requested, m + 1);
  if (r < 1) r = 1;

  PairSplit out;
  out.r_x = r;
  std::vector<int> top((std::size_t)r, -1);
  for (int pos = 0; pos < m; ++pos) {
    int blk = interval_block(m, r, pos);
    out.x_block[order[(std::size_t)pos]] = blk;
    top[(std::size_t)blk] = order[(std::size_t)pos];  // last write wins: interval endpoint
  }
  for (int yv : ys) {
    int blk = r;
    for (int i = 0; i < r; ++i) {
      if (top[(std::size_t)i] < 0) continue;
      if (g.has_edge(top[(std::size_t)i], yv)) {
        blk = i;
        break;
      }
    }
    out.y_block[yv] = blk;
  }
  return out;
}

// True when count <= k * (2/delta)^k; evaluated in logs when the right side
// leaves int64 range.
bool within_block_budget(long long count, int k, const Rational& delta) {
  if (count == 0 || k == 0) return true;
  double log_bound = std::log2((double)k) + k * (1.0 + std::log2((double)delta.den()) -
                                                 std::log2((double)delta.num()));
  if (log_bound >= 62) return true;
  Rational bound = Rational(k) * (Rational(2) / delta).pow((unsigned)k);
  return Rational(count) <= bound;
}

}  // namespace

RefinementResult delta_homog_refinement(const Graph& g, const CliqueSystem& sys,
                                        const Rational& delta) {
  if (delta.num() <= 0 || delta >= Rational(1))
    throw PreconditionError("delta must lie in (0, 1)");
  validate_clique_system(g, sys);
  int k = (int)sys.cliques.size();
  VertexSet ground = sys.ground();
  long long n = ground.size();
  int r_requested = ceil_inverse_saturated(delta, (int)n + 2);

  // signature[v] = block indices of v in each pairwise split touching its clique.
  std::map<int, std::vector<int>> signature;
  for (int i = 0; i < k; ++i)
    for (int v : sys.cliques[(std::size_t)i]) signature[v] = {};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      PairSplit split = split_pair(g, sys.cliques[(std::size_t)i], sys.cliques[(std::size_t)j],
                                   r_requested);
      for (auto [v, blk] : split.x_block) signature[v].push_back(blk);
      for (auto [v, blk] : split.y_block) signature[v].push_back(blk);
    }

  RefinementResult out;
  out.r = r_requested;
  std::vector<VertexSet> blocks;
  for (int i = 0; i < k; ++i) {
    std::map<std::vector<int>, std::vector<int>> groups;  // lexicographic by signature
    for (int v : sys.cliques[(std::size_t)i]) groups[signature[v]].push_back(v);
    for (auto& [sig, members] : groups) blocks.emplace_back(members);
  }
  out.partition = Partition::create(ground, std::move(blocks));

  check_bound(within_block_budget(out.partition.block_count(), k, delta),
              "refinement produced more blocks than k*(2/delta)^k");
  out.ledger = homogeneity_deficiency(g, out.partition);
  // The interval construction leaves at most n^2/r worth of unresolved pairs,
  // which is within delta*n^2 because r >= 1/delta.
  check_bound(__int128(out.ledger.deficiency) * r_requested <= __int128(n) * n ||
                  Rational(out.ledger.deficiency) <= delta * Rational(n * n),
              "refinement deficiency exceeds delta*n^2");
  return out;
}

namespace {

// ceil(8 * p^4 / delta^2) saturated at cap: the interval count for the fine
// split. Computed directly so the tiny intermediate rational never needs to
// exist in int64.
int fine_interval_count(const Rational& delta, long long p_blocks, int cap) {
  __int128 num = __int128(8) * p_blocks * p_blocks * p_blocks * p_blocks * delta.den() *
                 delta.den();
  __int128 den = __int128(delta.num()) * delta.num();
  __int128 r = (num + den - 1) / den;
  if (r > cap) return cap;
  return (int)std::max<__int128>(r, 1);
}

Partition refine_with_intervals(const Graph& g, const CliqueSystem& sys, int r_requested,
                                const VertexSet& ground) {
  int k = (int)sys.cliques.size();
  std::map<int, std::vector<int>> signature;
  for (int i = 0; i < k; ++i)
    for (int v : sys.cliques[(std::size_t)i]) signature[v] = {};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      PairSplit split = split_pair(g, sys.cliques[(std::size_t)i], sys.cliques[(std::size_t)j],
                                   r_requested);
      for (auto [v, blk] : split.x_block) signature[v].push_back(blk);
      for (auto [v, blk] : split.y_block) signature[v].push_back(blk);
    }
  std::vector<VertexSet> blocks;
  for (int i = 0; i < k; ++i) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v : sys.cliques[(std::size_t)i]) groups[signature[v]].push_back(v);
    for (auto& [sig, members] : groups) blocks.emplace_back(members);
  }
  return Partition::create(ground, std::move(blocks));
}

Partition common_refinement(const VertexSet& ground, const Partition& a, const Partition& b) {
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int v : ground) groups[{a.block_of(v), b.block_of(v)}].push_back(v);
  std::vector<VertexSet> blocks;
  for (auto& [key, members] : groups) blocks.emplace_back(members);
  return Partition::create(ground, std::move(blocks));
}

bool pair_homogeneous(const Graph& g, const VertexSet& u, const VertexSet& v) {
  long long cross = 0;
  for (int a : u)
    for (int b : v) cross += g.has_edge(a, b);
  return cross == 0 || cross == (long long)u.size() * v.size();
}

}  // namespace

StrongPartition strong_homog_partition(const Graph& g, const CliqueSystem& sys,
                                       const Rational& delta, Rng& rng,
                                       const StrongPartitionConfig& cfg) {
  RefinementResult coarse = delta_homog_refinement(g, sys, delta);
  const Partition& p = coarse.partition;
  VertexSet ground = p.ground;
  long long n = ground.size();
  long long p_count = p.block_count();

  StrongPartition out;
  out.coarse_blocks = (int)p_count;
  if (n == 0) {
    out.attempts = 0;
    out.q_blocks = Partition::create(VertexSet{}, {});
    return out;
  }

  // Blocks of size >= delta*n/|P| survive as q blocks; the rest pool into z.
  std::vector<VertexSet> q;
  VertexSet z;
  for (const VertexSet& b : p.blocks) {
    // |b| >= delta*n/p  <=>  |b| * p * den >= n * num
    bool big = __int128(b.size()) * p_count * delta.den() >= __int128(n) * delta.num();
    if (big && !b.empty())
      q.push_back(b);
    else
      z = z.unite(b);
  }
  check_bound(Rational(z.size()) < delta * Rational(n), "exceptional set reached delta*n");
  {
    HomogeneityLedger qledger = homogeneity_deficiency(g, Partition::create(ground.minus(z), q));
    check_bound(Rational(qledger.deficiency) <= delta * Rational(n * n),
                "q block deficiency exceeds delta*n^2");
  }

  // Fine split at delta' = delta^2 / (8 |P|^4), then merged with the coarse one.
  int fine_r = fine_interval_count(delta, p_count, (int)n + 2);
  Partition fine = refine_with_intervals(g, sys, fine_r, ground);
  out.fine_blocks = fine.block_count();
  Partition merged = common_refinement(ground, p, fine);
  detail::require(merged.block_count() <= p.block_count() * fine.block_count(),
                  "common refinement exceeded the product bound");
  out.refined_product_cap = (int)(p.block_count() * (long long)fine.block_count() > INT32_MAX
                                      ? INT32_MAX
                                      : p.block_count() * fine.block_count());

  double log_p = std::log2(std::max<double>(1.0, (double)p_count));
  double log_delta = std::log2((double)delta.num()) - std::log2((double)delta.den());
  // (delta^2/(8 p^4))/2 sized cores relative to n, in log2: recorded for reports.
  out.w_size_bound_log2 = 2 * log_delta - 3 - 4 * log_p - 1;

  std::vector<std::string> transcript;
  for (int attempt = 1; attempt <= cfg.max_retries; ++attempt) {
    std::vector<VertexSet> cores;
    cores.reserve(q.size());
    for (const VertexSet& qb : q) {
      int pick = qb[(int)rng.below((std::uint64_t)qb.size())];
      int blk = merged.block_of(pick);
      detail::require(blk >= 0, "sampled vertex missing from merged partition");
      cores.push_back(merged.blocks[(std::size_t)blk]);
    }
    int bad_i = -1, bad_j = -1;
    for (std::size_t i = 0; i < cores.size() && bad_i < 0; ++i)
      for (std::size_t j = i + 1; j < cores.size(); ++j)
        if (!pair_homogeneous(g, cores[i], cores[j])) {
          bad_i = (int)i;
          bad_j = (int)j;
          break;
        }
    if (bad_i < 0) {
      out.attempts = attempt;
      out.z = z;
      out.q_blocks = Partition::create(ground.minus(z), q);
      out.w_cores = std::move(cores);
      for (std::size_t i = 0; i < out.w_cores.size(); ++i)
        detail::require(out.w_cores[i].is_subset_of(out.q_blocks.blocks[i]),
                        "w core escaped its q block");
      return out;
    }
    std::ostringstream line;
    line << "attempt " << attempt << ": cores " << bad_i << "," << bad_j << " not homogeneous";
    transcript.push_back(line.str());
  }
  throw RetriesExhaustedError("no homogeneous core sample within retry cap", transcript);
}

}  // namespace c4lab

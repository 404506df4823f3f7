#include "c4lab/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <future>
#include <map>
#include <thread>

#include "c4lab/threads.hpp"

namespace c4lab {

// ---- samplers -----------------------------------------------------------------

int default_clique_sample_size(const Rational& eps, int n) {
  if (eps.num() <= 0) throw PreconditionError("eps must be positive");
  __int128 num = __int128(100) * eps.den() * eps.den() * eps.den() * eps.den() * eps.den();
  __int128 den = __int128(eps.num()) * eps.num() * eps.num() * eps.num() * eps.num();
  __int128 q = (num + den - 1) / den;
  if (q > n) return n;
  return (int)std::max<__int128>(q, 1);
}

CliqueSampleResult sample_clique_test(const Graph& g, const CliqueSampleConfig& cfg, Rng& rng) {
  int n = g.vertex_count();
  if (cfg.q < 1 || cfg.q > n) throw PreconditionError("sample size out of range");
  if (!(Rational(0) < cfg.eps && cfg.eps * Rational(2) < cfg.rho * cfg.rho))
    throw PreconditionError("need 0 < eps < rho^2/2");
  std::vector<int> sample = rng.sample_without_replacement(n, cfg.q);
  Graph sub = induced_subgraph(g, VertexSet(sample));
  CliqueResult clique = max_clique(sub);
  // Map the witness back to host labels.
  std::vector<int> sorted_sample = VertexSet(sample).members();
  std::vector<int> host;
  for (int v : clique.witness) host.push_back(sorted_sample[(std::size_t)v]);
  Rational threshold = (cfg.rho - cfg.eps / Rational(2)) * Rational(cfg.q);
  CliqueSampleResult out;
  out.looks_far = Rational(clique.size) < threshold;
  out.sample_clique = clique.size;
  out.sample = std::move(sample);
  out.clique_witness = VertexSet(host);
  detail::require(is_clique(g, out.clique_witness), "sampled clique witness broken in host");
  return out;
}

DensitySampleResult sample_density_test(const Graph& g, const DensitySampleConfig& cfg, Rng& rng) {
  int n = g.vertex_count();
  if (cfg.r < 1 || cfg.r > n) throw PreconditionError("sample size out of range");
  if (cfg.alpha.num() <= 0) throw PreconditionError("alpha must be positive");
  // r >= 100/alpha^2 unless the cap at n binds.
  bool meets = Rational(cfg.r) * cfg.alpha * cfg.alpha >= Rational(100) || cfg.r == n;
  if (!meets) throw PreconditionError("sample size below 100/alpha^2");
  std::vector<int> sample = rng.sample_without_replacement(n, cfg.r);
  long long e = edge_count_within(g, VertexSet(sample));
  DensitySampleResult out;
  out.passed = Rational(e) >= cfg.alpha / Rational(2) * Rational((long long)cfg.r * cfg.r);
  out.sampled_edges = e;
  out.sample = std::move(sample);
  return out;
}

// ---- dense subset search ----------------------------------------------------------

namespace {

bool satisfies(const Graph& g, const VertexSet& s, int min_size, const Rational& min_density) {
  if (s.size() < min_size || s.size() < 2) return false;
  return density(g, s) >= min_density;
}

std::optional<VertexSet> peel_for_dense(const Graph& g, const VertexSet& within, int min_size,
                                        const Rational& min_density) {
  std::vector<int> order;  // peel order, min degree first
  std::vector<int> alive = within.members();
  std::map<int, long long> deg;
  for (int v : alive) {
    long long d = 0;
    for (int u : alive) d += g.has_edge(v, u);
    deg[v] = d;
  }
  std::vector<std::vector<int>> prefixes;
  std::vector<int> current = alive;
  while ((int)current.size() >= std::max(min_size, 2)) {
    prefixes.push_back(current);
    int worst = current[0];
    for (int v : current)
      if (deg[v] < deg[worst] || (deg[v] == deg[worst] && v < worst)) worst = v;
    std::vector<int> next;
    for (int v : current)
      if (v != worst) next.push_back(v);
    for (int v : next) deg[v] -= g.has_edge(v, worst);
    current = next;
  }
  // Largest satisfying prefix, ties broken toward higher density.
  std::optional<VertexSet> best;
  Rational best_density(0);
  for (const auto& pref : prefixes) {
    VertexSet s{std::vector<int>(pref)};
    if (!satisfies(g, s, min_size, min_density)) continue;
    Rational d = density(g, s);
    if (!best || s.size() > best->size() || (s.size() == best->size() && d > best_density)) {
      best = s;
      best_density = d;
    }
  }
  return best;
}

std::optional<VertexSet> local_search_dense(const Graph& g, const VertexSet& within, int min_size,
                                            const Rational& min_density, int rounds) {
  if (within.size() < std::max(min_size, 2)) return std::nullopt;
  // Seed: densest peel prefix of admissible size, constraints relaxed.
  std::vector<int> seed(within.members().begin(),
                        within.members().begin() + std::max(min_size, 2));
  {
    auto relaxed = peel_for_dense(g, within, std::max(min_size, 2), Rational(0));
    if (relaxed) seed = relaxed->members();
  }
  VertexSet s{seed};
  for (int round = 0; round < rounds; ++round) {
    if (satisfies(g, s, min_size, min_density)) return s;
    // Swap the member with fewest inside neighbors for the outsider with most.
    int worst = -1;
    long long worst_deg = -1;
    for (int v : s) {
      long long d = 0;
      for (int u : s) d += g.has_edge(v, u);
      if (worst < 0 || d < worst_deg || (d == worst_deg && v < worst)) {
        worst = v;
        worst_deg = d;
      }
    }
    int bestout = -1;
    long long bestout_deg = -1;
    for (int v : within) {
      if (s.contains(v)) continue;
      long long d = 0;
      for (int u : s) d += g.has_edge(v, u);
      if (d > bestout_deg || (d == bestout_deg && v < bestout)) {
        bestout = v;
        bestout_deg = d;
      }
    }
    if (worst < 0 || bestout < 0 || bestout_deg <= worst_deg) return std::nullopt;
    std::vector<int> next;
    for (int v : s)
      if (v != worst) next.push_back(v);
    next.push_back(bestout);
    s = VertexSet(next);
  }
  return std::nullopt;
}

std::optional<VertexSet> exhaustive_dense(const Graph& g, const VertexSet& within, int min_size,
                                          const Rational& min_density) {
  int n = within.size();
  std::optional<VertexSet> best;
  Rational best_density(0);
  for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
    if (std::popcount(mask) < std::max(min_size, 2)) continue;
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) members.push_back(within[i]);
    VertexSet s{members};
    if (!satisfies(g, s, min_size, min_density)) continue;
    Rational d = density(g, s);
    if (!best || s.size() > best->size() || (s.size() == best->size() && d > best_density)) {
      best = s;
      best_density = d;
    }
  }
  return best;
}

}  // namespace

std::optional<VertexSet> find_dense_subset(const Graph& g, const VertexSet& within, int min_size,
                                           const Rational& min_density,
                                           const DenseFinderPolicy& policy) {
  if (min_size < 2) throw PreconditionError("dense subsets need at least two vertices");
  std::optional<VertexSet> found = peel_for_dense(g, within, min_size, min_density);
  if (!found)
    found = local_search_dense(g, within, min_size, min_density, policy.local_search_rounds);
  if (!found && within.size() <= policy.exhaustive_max_n)
    found = exhaustive_dense(g, within, min_size, min_density);
  if (found)
    detail::require(satisfies(g, *found, min_size, min_density),
                    "dense subset failed verification");
  return found;
}

// ---- clique size vs density -----------------------------------------------------

GhsResult ghs_check(const Graph& g) {
  if (auto c4 = find_induced_c4(g))
    throw PreconditionError("graph has an induced C4", {(*c4)[0], (*c4)[1], (*c4)[2], (*c4)[3]});
  int n = g.vertex_count();
  if (n == 0) throw PreconditionError("empty graph");
  Rational alpha = Rational(g.edge_count()) / Rational((long long)n * n);
  CliqueResult clique = max_clique(g);
  GhsResult out;
  out.holds = Rational(clique.size) >= Rational(2, 5) * alpha * alpha * Rational(n);
  out.clique = clique.size;
  out.alpha = alpha;
  out.witness = clique.witness;
  return out;
}

// ---- peeling ------------------------------------------------------------------

PeelResult peel_decomposition(const Graph& g, const Rational& alpha, const Rational& gamma,
                              const ConstantsConfig& constants, const DenseFinderPolicy& policy) {
  if (!(Rational(0) < alpha && alpha < Rational(1)))
    throw PreconditionError("alpha must lie in (0, 1)");
  if (!(Rational(0) < gamma && gamma < Rational(1)))
    throw PreconditionError("gamma must lie in (0, 1)");
  if (constants.d < 1) throw PreconditionError("constant d must be a positive integer");
  long long n = g.vertex_count();
  Rational edge_floor = alpha * Rational(n * n);
  Rational beta = Rational(1, 4) * gamma.pow((unsigned)constants.d);
  Rational min_density = Rational(1) - beta;

  PeelResult out;
  VertexSet residual = VertexSet::range((int)n);
  while (true) {
    ++out.iterations;
    if (Rational(edge_count_within(g, residual)) < edge_floor) {
      out.kind = PeelResult::Kind::Partitioned;
      out.y = residual;
      break;
    }
    // |X| >= 0.1 * alpha^2 * |residual|, with 2 as the workable floor.
    Rational raw = Rational(1, 10) * alpha * alpha * Rational(residual.size());
    int min_size = (int)std::max<long long>(2, raw.ceil());
    auto x = find_dense_subset(g, residual, min_size, min_density, policy);
    if (!x) {
      Graph sub = induced_subgraph(g, residual);
      long long c4s = count_induced_c4(sub);
      out.kind = c4s > 0 ? PeelResult::Kind::C4Rich : PeelResult::Kind::Incomplete;
      out.residual = residual;
      out.residual_c4 = c4s;
      break;
    }
    // Each extracted block keeps the promised relative size and density.
    check_bound(Rational(x->size()) * Rational(10) >= alpha * alpha * Rational(residual.size()),
                "extracted block below 0.1*alpha^2*|V_i|");
    check_bound(density(g, *x) >= min_density, "extracted block below promised density");
    // Against the whole graph: |X_i| >= 0.1*alpha^3*n (|V_i| >= alpha*n while
    // e(V_i) >= alpha*n^2) and density >= 1 - gamma (the slack is 0.25*gamma^d).
    {
      bool size_ok;
      try {
        size_ok = Rational(x->size()) * Rational(10) >= alpha.pow(3) * Rational(n);
      } catch (const std::overflow_error&) {
        size_ok = std::log2(10.0 * x->size()) >=
                  3 * std::log2(alpha.to_double()) + std::log2((double)std::max<long long>(n, 1));
      }
      check_bound(size_ok, "extracted block below 0.1*alpha^3*n");
    }
    check_bound(density(g, *x) >= Rational(1) - gamma, "extracted block below 1-gamma density");
    out.x_blocks.push_back(*x);
    residual = residual.minus(*x);
    if (out.iterations > (int)n + 2)
      throw std::logic_error("peel loop failed to shrink the residual");
  }
  return out;
}

// ---- conditional regularity --------------------------------------------------------

Graph homogenize_on_w(const Graph& g_prime, const StructureReport& sr) {
  Graph out = g_prime;
  const auto& q = sr.strong.q_blocks.blocks;
  const auto& w = sr.strong.w_cores;
  detail::require(q.size() == w.size(), "q blocks and w cores disagree");
  HomogeneityLedger before = homogeneity_deficiency(g_prime, sr.strong.q_blocks);
  long long toggles = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (w[i].empty() || w[j].empty()) continue;
      bool complete = g_prime.has_edge(w[i][0], w[j][0]);
      // The w pair is homogeneous, so one probe fixes the type.
      for (int a : q[i])
        for (int b : q[j]) {
          if (out.has_edge(a, b) != complete) {
            out.toggle_edge(a, b);
            ++toggles;
          }
        }
    }
  // A homogeneous q pair always agrees with its w pair, so only deficient
  // pairs get touched.
  detail::require(toggles <= before.deficiency, "homogenization exceeded the q deficiency");
  return out;
}

CondRegResult conditional_regularity(const Graph& g, const Rational& alpha, const Rational& gamma,
                                     Rng& rng, const CondRegConfig& cfg) {
  CondRegResult out;
  long long n = g.vertex_count();

  PeelResult peel = peel_decomposition(g, alpha, gamma, cfg.constants, cfg.dense_policy);
  if (peel.kind == PeelResult::Kind::C4Rich) {
    out.kind = CondRegResult::Kind::C4Rich;
    out.residual = peel.residual;
    out.residual_c4 = peel.residual_c4;
    return out;
  }
  if (peel.kind == PeelResult::Kind::Incomplete) {
    out.kind = CondRegResult::Kind::StageFailure;
    out.failure_stage = "peel";
    out.failure_reason = "dense-set search failed on a residual with no induced C4";
    return out;
  }

  {
    // k <= 10 * alpha^-3, exactly when alpha^3 fits, by logarithms otherwise.
    long long k_blocks = (long long)peel.x_blocks.size();
    bool ok;
    try {
      ok = Rational(k_blocks) * alpha.pow(3) <= Rational(10);
    } catch (const std::overflow_error&) {
      ok = std::log2((double)std::max<long long>(k_blocks, 1)) + 3 * std::log2(alpha.to_double()) <=
           std::log2(10.0);
    }
    check_bound(ok, "peel produced more than 10*alpha^-3 blocks");
  }

  // Assemble the edited graph: independent y, clique x blocks, M2-free pairs.
  Graph edited = g;
  VertexSet x_all;
  for (const VertexSet& xb : peel.x_blocks) x_all = x_all.unite(xb);
  for (int i = 0; i < peel.y.size(); ++i)
    for (int j = i + 1; j < peel.y.size(); ++j)
      if (edited.has_edge(peel.y[i], peel.y[j])) edited.remove_edge(peel.y[i], peel.y[j]);
  for (const VertexSet& xb : peel.x_blocks)
    for (int i = 0; i < xb.size(); ++i)
      for (int j = i + 1; j < xb.size(); ++j)
        if (!edited.has_edge(xb[i], xb[j])) edited.add_edge(xb[i], xb[j]);

  // Pair edits touch disjoint edge sets, so they are computed independently
  // (possibly concurrently) and applied in pair order.
  int k = (int)peel.x_blocks.size();
  std::vector<M2EditRecord> records;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::vector<M2EditResult> pair_edits((std::size_t)pairs.size());
  auto worker = [&](std::size_t from, std::size_t to) {
    for (std::size_t t = from; t < to; ++t) {
      auto [i, j] = pairs[t];
      BipartitePair bp{peel.x_blocks[(std::size_t)i], peel.x_blocks[(std::size_t)j]};
      bool exact = bp.x.size() <= cfg.m2_exact_cap;
      pair_edits[t] = min_edits_to_m2free(
          g, bp, exact ? EditSearchMode::Exact : EditSearchMode::Heuristic, cfg.m2_exact_cap);
    }
  };
  int threads = std::min<int>(thread_cap(), (int)pairs.size() > 0 ? (int)pairs.size() : 1);
  if (threads > 1 && pairs.size() > 1) {
    std::vector<std::future<void>> futs;
    std::size_t chunk = (pairs.size() + threads - 1) / (std::size_t)threads;
    for (std::size_t from = 0; from < pairs.size(); from += chunk)
      futs.push_back(std::async(std::launch::async, worker, from,
                                std::min(from + chunk, pairs.size())));
    for (auto& f : futs) f.get();
  } else if (!pairs.empty()) {
    worker(0, pairs.size());
  }
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    auto [i, j] = pairs[t];
    records.push_back(M2EditRecord{i, j, pair_edits[t].mode == EditSearchMode::Exact,
                                   pair_edits[t].edits});
    for (const Edit& e : pair_edits[t].edit_set) {
      if (e.kind == EditKind::Add) {
        if (!edited.has_edge(e.u, e.v)) edited.add_edge(e.u, e.v);
      } else {
        if (edited.has_edge(e.u, e.v)) edited.remove_edge(e.u, e.v);
      }
    }
  }

  // Inside-X budget check before any further stage.
  {
    EditSet inside = EditSet::diff(g, edited).restricted_to(x_all);
    if (!(Rational(inside.size()) < gamma * Rational(n * n))) {
      out.kind = CondRegResult::Kind::StageFailure;
      out.failure_stage = "m2-edits";
      out.failure_reason = "edits inside the x blocks reached gamma*n^2";
      return out;
    }
  }

  // Strong partition of the edited graph's x side, delta = alpha.
  CliqueSystem sys{peel.x_blocks};
  StrongPartition strong;
  try {
    strong = strong_homog_partition(edited, sys, alpha, rng, cfg.strong);
  } catch (const RetriesExhaustedError& e) {
    out.kind = CondRegResult::Kind::StageFailure;
    out.failure_stage = "strong-partition";
    out.failure_reason = e.what();
    return out;
  } catch (const BoundViolation& e) {
    out.kind = CondRegResult::Kind::StageFailure;
    out.failure_stage = "strong-partition";
    out.failure_reason = e.what();
    return out;
  }

  // Isolate the exceptional set.
  for (int zv : strong.z)
    for (int u : edited.neighbors(zv))
      if (edited.has_edge(zv, u)) edited.remove_edge(zv, u);

  StructureReport sr;
  sr.g_prime = std::move(edited);
  sr.x_blocks = peel.x_blocks;
  sr.y = peel.y;
  sr.z = strong.z;
  sr.strong = std::move(strong);
  sr.edits_total = EditSet::diff(g, sr.g_prime);
  sr.edits_inside_x = sr.edits_total.restricted_to(x_all.minus(sr.z));
  sr.alpha = alpha;
  sr.gamma = gamma;
  sr.m2_records = std::move(records);
  {
    double la = alpha.to_double() > 0 ? std::log2(alpha.to_double() / 20.0) : 0;
    double inv6 = std::pow(alpha.to_double(), -6.0);
    sr.w_size_bound_log2 = 4000.0 * inv6 * la;
  }

  std::vector<std::string> failures = verify_structure_report(g, sr);
  if (!failures.empty()) {
    out.kind = CondRegResult::Kind::StageFailure;
    out.failure_stage = "clause-check";
    std::string reason = "violated:";
    for (const auto& f : failures) reason += " " + f;
    out.failure_reason = reason;
    return out;
  }
  out.kind = CondRegResult::Kind::Structure;
  out.report = std::move(sr);
  return out;
}

std::vector<std::string> verify_structure_report(const Graph& g, const StructureReport& sr) {
  std::vector<std::string> failures;
  long long n = g.vertex_count();
  const Graph& gp = sr.g_prime;

  // 1: x blocks minus z induce cliques, y induces an independent set.
  bool cliques_ok = true;
  for (const VertexSet& xb : sr.x_blocks)
    if (!is_clique(gp, xb.minus(sr.z))) cliques_ok = false;
  if (!cliques_ok) failures.push_back("x-blocks-clique");
  if (!is_independent(gp, sr.y)) failures.push_back("y-independent");

  // 2: z is small and isolated.
  if (!(Rational(sr.z.size()) < sr.alpha * Rational(n))) failures.push_back("z-size");
  for (int zv : sr.z)
    if (gp.degree(zv) != 0) {
      failures.push_back("z-isolated");
      break;
    }

  // 3: q-pair deficiency within alpha*n^2.
  HomogeneityLedger ledger = homogeneity_deficiency(gp, sr.strong.q_blocks);
  if (!(Rational(ledger.deficiency) <= sr.alpha * Rational(n * n)))
    failures.push_back("q-deficiency");

  // 4: w cores pairwise homogeneous.
  bool w_ok = true;
  for (std::size_t i = 0; i < sr.strong.w_cores.size() && w_ok; ++i)
    for (std::size_t j = i + 1; j < sr.strong.w_cores.size(); ++j) {
      const VertexSet& a = sr.strong.w_cores[i];
      const VertexSet& b = sr.strong.w_cores[j];
      long long cross = 0;
      for (int u : a)
        for (int v : b) cross += gp.has_edge(u, v);
      if (cross != 0 && cross != (long long)a.size() * b.size()) {
        w_ok = false;
        break;
      }
    }
  if (!w_ok) failures.push_back("w-homogeneous");

  // 5: edit budgets.
  EditSet total = EditSet::diff(g, gp);
  if (!(Rational(total.size()) < (Rational(2) * sr.alpha + sr.gamma) * Rational(n * n)))
    failures.push_back("total-edit-budget");
  VertexSet x_all;
  for (const VertexSet& xb : sr.x_blocks) x_all = x_all.unite(xb);
  EditSet inside = total.restricted_to(x_all.minus(sr.z));
  if (!(Rational(inside.size()) < sr.gamma * Rational(n * n)))
    failures.push_back("inside-x-edit-budget");
  if (!(total == sr.edits_total)) failures.push_back("edit-set-mismatch");
  if (!(inside == sr.edits_inside_x)) failures.push_back("inside-edit-set-mismatch");

  return failures;
}

}  // namespace c4lab

#include "c4lab/decomposition.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace c4lab;

namespace {

// K_h plus isolated vertices: a split graph with no cross edges.
Graph clique_plus_isolated(int h, int rest) {
  Graph g(h + rest);
  for (int u = 0; u < h; ++u)
    for (int v = u + 1; v < h; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("clique sample tester") {
  CHECK(default_clique_sample_size(Rational(1, 2), 100000) == 3200);
  CHECK(default_clique_sample_size(Rational(1, 2), 10) == 10);  // capped at n

  Rng rng(3);
  CliqueSampleConfig cfg;
  cfg.q = 6;
  cfg.rho = Rational(3, 5);
  cfg.eps = Rational(1, 10);  // (rho - eps/2) q = 0.55 * 6 = 3.3
  CliqueSampleResult far = sample_clique_test(Graph(20), cfg, rng);
  CHECK(far.looks_far);
  CHECK(far.sample_clique == 1);
  CHECK(far.sample.size() == 6);

  CliqueSampleResult close = sample_clique_test(corpus::complete(20), cfg, rng);
  CHECK_FALSE(close.looks_far);
  CHECK(close.sample_clique == 6);
  CHECK(is_clique(corpus::complete(20), close.clique_witness));
  CHECK(close.clique_witness.size() == close.sample_clique);
  for (int v : close.clique_witness)
    CHECK(std::count(close.sample.begin(), close.sample.end(), v) == 1);

  cfg.q = 30;
  CHECK_THROWS_AS(sample_clique_test(Graph(20), cfg, rng), PreconditionError);
  cfg.q = 6;
  cfg.eps = Rational(1, 4);  // eps >= rho^2/2 = 9/50
  CHECK_THROWS_AS(sample_clique_test(Graph(20), cfg, rng), PreconditionError);
}

TEST_CASE("density sample tester") {
  Rng rng(9);
  DensitySampleConfig cfg;
  cfg.alpha = Rational(1, 2);
  cfg.r = 400;  // 100/alpha^2
  CHECK_THROWS_AS(sample_density_test(Graph(20), cfg, rng), PreconditionError);

  cfg.r = 20;  // capped-at-n regime: r = n is allowed
  DensitySampleResult fail = sample_density_test(Graph(20), cfg, rng);
  CHECK_FALSE(fail.passed);
  CHECK(fail.sampled_edges == 0);

  DensitySampleResult pass = sample_density_test(corpus::complete(20), cfg, rng);
  CHECK(pass.passed);
  CHECK(pass.sampled_edges == 190);
}

TEST_CASE("dense subset search") {
  Graph k8 = corpus::complete(8);
  auto full = find_dense_subset(k8, VertexSet::range(8), 8, Rational(1));
  REQUIRE(full.has_value());
  CHECK(*full == VertexSet::range(8));

  CHECK_FALSE(find_dense_subset(Graph(8), VertexSet::range(8), 2, Rational(1, 2)).has_value());

  Graph split = clique_plus_isolated(8, 8);
  auto core = find_dense_subset(split, VertexSet::range(16), 8, Rational(1));
  REQUIRE(core.has_value());
  CHECK(*core == VertexSet::range(8));

  CHECK_THROWS_AS(find_dense_subset(k8, VertexSet::range(8), 1, Rational(1)), PreconditionError);

  for (int seed = 0; seed < 30; ++seed) {
    Rng rng((std::uint64_t)(2500 + seed));
    Graph g = random_graph(14, Rational(1, 2), rng);
    auto found = find_dense_subset(g, VertexSet::range(14), 3, Rational(2, 3));
    if (found) {
      CHECK(found->size() >= 3);
      CHECK(density(g, *found) >= Rational(2, 3));
    }
  }
}

TEST_CASE("clique size against edge density") {
  GhsResult kn = ghs_check(corpus::complete(12));
  CHECK(kn.holds);
  CHECK(kn.clique == 12);
  CHECK(is_clique(corpus::complete(12), kn.witness));

  GhsResult edgeless = ghs_check(Graph(6));
  CHECK(edgeless.holds);
  CHECK(edgeless.alpha == Rational(0));

  CHECK_THROWS_AS(ghs_check(corpus::cycle(4)), PreconditionError);
  try {
    ghs_check(corpus::cycle(4));
  } catch (const PreconditionError& e) {
    CHECK(e.witness.size() == 4);
  }

  for (int seed = 0; seed < 50; ++seed) {
    Rng rng((std::uint64_t)(3500 + seed));
    Graph g = corpus::random_split(16, Rational(1, 2), rng);
    REQUIRE(oracle::count_c4(g) == 0);
    GhsResult r = ghs_check(g);
    CHECK(r.holds);
    CHECK(r.clique == oracle::max_clique_size(g));
    CHECK(r.alpha == Rational(g.edge_count()) / Rational(16 * 16));
  }
}

TEST_CASE("peel decomposition") {
  PeelResult none = peel_decomposition(Graph(10), Rational(1, 10), Rational(1, 10));
  CHECK(none.kind == PeelResult::Kind::Partitioned);
  CHECK(none.x_blocks.empty());
  CHECK(none.y == VertexSet::range(10));

  PeelResult k16 = peel_decomposition(corpus::complete(16), Rational(1, 10), Rational(1, 10));
  CHECK(k16.kind == PeelResult::Kind::Partitioned);
  REQUIRE(k16.x_blocks.size() == 1);
  CHECK(k16.x_blocks[0] == VertexSet::range(16));
  CHECK(k16.y.empty());

  Graph split = clique_plus_isolated(8, 8);
  PeelResult sp = peel_decomposition(split, Rational(1, 20), Rational(1, 10));
  CHECK(sp.kind == PeelResult::Kind::Partitioned);
  REQUIRE(sp.x_blocks.size() == 1);
  CHECK(sp.x_blocks[0] == VertexSet::range(8));
  CHECK(sp.y == corpus::range_set(8, 16));

  CHECK_THROWS_AS(peel_decomposition(Graph(4), Rational(2), Rational(1, 2)), PreconditionError);
  CHECK_THROWS_AS(peel_decomposition(Graph(4), Rational(1, 2), Rational(0)), PreconditionError);

  for (int seed = 0; seed < 30; ++seed) {
    Rng rng((std::uint64_t)(4200 + seed));
    Graph g = random_graph(18, Rational(1, 3), rng);
    Rational alpha(1, 5), gamma(3, 10);
    PeelResult pr = peel_decomposition(g, alpha, gamma);
    if (pr.kind == PeelResult::Kind::Partitioned) {
      // partition covers V, blocks dense enough, residual sparse
      VertexSet seen = pr.y;
      for (const auto& xb : pr.x_blocks) {
        CHECK(xb.size() >= 2);
        CHECK(density(g, xb) >= Rational(1) - Rational(1, 4) * gamma);
        CHECK_FALSE(seen.intersects(xb));
        seen = seen.unite(xb);
      }
      CHECK(seen == VertexSet::range(18));
      CHECK(Rational(edge_count_within(g, pr.y)) < alpha * Rational(18 * 18));
    } else {
      CHECK(pr.kind == PeelResult::Kind::C4Rich);
      CHECK(pr.residual_c4 == oracle::count_c4(induced_subgraph(g, pr.residual)));
      CHECK(pr.residual_c4 > 0);
    }
  }
}

TEST_CASE("conditional regularity on canonical inputs") {
  Rng rng(31);
  Graph split = clique_plus_isolated(8, 8);
  CondRegResult trivial = conditional_regularity(split, Rational(1, 20), Rational(1, 10), rng);
  REQUIRE(trivial.kind == CondRegResult::Kind::Structure);
  CHECK(trivial.report->z.empty());
  CHECK(trivial.report->edits_total.empty());
  CHECK(trivial.report->g_prime == split);
  CHECK(verify_structure_report(split, *trivial.report).empty());

  Graph joined = corpus::complete(12);
  CondRegResult two = conditional_regularity(joined, Rational(1, 5), Rational(3, 10), rng);
  REQUIRE(two.kind == CondRegResult::Kind::Structure);
  CHECK(two.report->edits_inside_x.empty());
  CHECK(verify_structure_report(joined, *two.report).empty());
}

TEST_CASE("conditional regularity never passes silently") {
  int structures = 0, failures = 0;
  for (int seed = 0; seed < 25; ++seed) {
    Rng rng((std::uint64_t)(6100 + seed));
    Graph g = random_graph(18, Rational(1, 3), rng);
    CondRegResult res = conditional_regularity(g, Rational(1, 5), Rational(3, 10), rng);
    if (res.kind == CondRegResult::Kind::Structure) {
      ++structures;
      CHECK(verify_structure_report(g, *res.report).empty());
      // independent re-checks of each clause on g_prime
      const StructureReport& sr = *res.report;
      const Graph& gp = sr.g_prime;
      for (const auto& xb : sr.x_blocks) CHECK(is_clique(gp, xb.minus(sr.z)));
      CHECK(is_independent(gp, sr.y));
      for (int zv : sr.z) CHECK(gp.degree(zv) == 0);
      CHECK(oracle::deficiency(gp, sr.strong.q_blocks) ==
            homogeneity_deficiency(gp, sr.strong.q_blocks).deficiency);
      for (std::size_t i = 0; i < sr.strong.w_cores.size(); ++i)
        for (std::size_t j = i + 1; j < sr.strong.w_cores.size(); ++j)
          CHECK(oracle::homogeneous(gp, sr.strong.w_cores[i], sr.strong.w_cores[j]));
      CHECK(apply_edits(g, sr.edits_total) == gp);
    } else if (res.kind == CondRegResult::Kind::StageFailure) {
      ++failures;
      CHECK_FALSE(res.failure_stage.empty());
      CHECK_FALSE(res.failure_reason.empty());
    } else {
      CHECK(res.residual_c4 > 0);
    }
  }
  CHECK(structures + failures >= 1);
}

TEST_CASE("structure report verifier catches tampering") {
  Rng rng(77);
  Graph split = clique_plus_isolated(8, 8);
  CondRegResult res = conditional_regularity(split, Rational(1, 20), Rational(1, 10), rng);
  REQUIRE(res.kind == CondRegResult::Kind::Structure);
  StructureReport sr = *res.report;

  StructureReport broken = sr;
  broken.g_prime.add_edge(8, 9);  // y loses independence
  auto fails = verify_structure_report(split, broken);
  CHECK(std::count(fails.begin(), fails.end(), "y-independent") == 1);
  CHECK(std::count(fails.begin(), fails.end(), "edit-set-mismatch") == 1);

  StructureReport wrong_alpha = sr;
  wrong_alpha.z = VertexSet({0, 1, 2, 3, 4, 5, 6, 7, 8});  // bigger than alpha*n
  auto zfails = verify_structure_report(split, wrong_alpha);
  CHECK(std::count(zfails.begin(), zfails.end(), "z-size") == 1);
}

TEST_CASE("homogenization on the w cores") {
  Rng rng(13);
  Graph split = clique_plus_isolated(8, 8);
  CondRegResult res = conditional_regularity(split, Rational(1, 20), Rational(1, 10), rng);
  REQUIRE(res.kind == CondRegResult::Kind::Structure);
  const StructureReport& sr = *res.report;

  HomogeneityLedger before = homogeneity_deficiency(sr.g_prime, sr.strong.q_blocks);
  Graph h = homogenize_on_w(sr.g_prime, sr);
  CHECK((long long)EditSet::diff(sr.g_prime, h).size() <= before.deficiency);
  CHECK(homogenize_on_w(h, sr) == h);
  if (before.deficiency == 0) CHECK(h == sr.g_prime);

  // every q pair now matches its w pair's relation
  for (std::size_t i = 0; i < sr.strong.w_cores.size(); ++i)
    for (std::size_t j = i + 1; j < sr.strong.w_cores.size(); ++j) {
      const VertexSet& qi = sr.strong.q_blocks.blocks[i];
      const VertexSet& qj = sr.strong.q_blocks.blocks[j];
      if (qi.empty() || qj.empty()) continue;
      int want = oracle::pair_relation(sr.g_prime, sr.strong.w_cores[i], sr.strong.w_cores[j]);
      CHECK(oracle::pair_relation(h, qi, qj) == want);
    }
}

#include "c4lab/lowerbound.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace c4lab;

TEST_CASE("blow-up construction") {
  CHECK(blowup_epsilon(5) == Rational(1, 50));
  CHECK(blowup_epsilon(3) == Rational(1, 18));

  CHECK(blowup_edge_count({5, 1}) == 5);   // plain c5
  CHECK(blowup_edge_count({5, 2}) == 25);  // 5*1 + 5*4
  CHECK(blowup_edge_count({3, 2}) == 15);  // k6

  Blowup c5 = blowup_cycle({5, 1});
  CHECK(c5.graph == corpus::cycle(5));

  Blowup k6 = blowup_cycle({3, 2});
  CHECK(k6.graph == corpus::complete(6));

  for (int k = 3; k <= 8; ++k)
    for (int f = 1; f <= 4; ++f) {
      Blowup b = blowup_cycle({k, f});
      CHECK(b.graph.vertex_count() == k * f);
      CHECK(b.graph.edge_count() == blowup_edge_count({k, f}));
      REQUIRE((int)b.parts.size() == k);
      for (int i = 0; i < k; ++i) {
        CHECK(b.parts[(std::size_t)i].size() == f);
        CHECK(b.parts[(std::size_t)i].members().front() == i * f);
        for (int j = i + 1; j < k; ++j) {
          bool neighbor = j - i == 1 || (i == 0 && j == k - 1);
          int rel =
              oracle::pair_relation(b.graph, b.parts[(std::size_t)i], b.parts[(std::size_t)j]);
          CHECK(rel == (neighbor ? 1 : -1));
        }
        // each part is a clique
        for (int u : b.parts[(std::size_t)i])
          for (int v : b.parts[(std::size_t)i])
            if (u < v) CHECK(b.graph.has_edge(u, v));
      }
    }

  CHECK_THROWS_AS(blowup_cycle({2, 2}), PreconditionError);
  CHECK_THROWS_AS(blowup_cycle({5, 0}), PreconditionError);
}

TEST_CASE("no short induced cycles in long blow-ups") {
  for (int k = 5; k <= 7; ++k)
    for (int f = 1; f <= 3; ++f) {
      ShortCycleScan scan = verify_no_short_induced_cycles(blowup_cycle({k, f}));
      CHECK(scan.clean);
    }
  // the scan window is 4 <= l < k, so a c5 inside b_{6,f} would be caught
  Blowup b62 = blowup_cycle({6, 2});
  ShortCycleScan s62 = verify_no_short_induced_cycles(b62);
  CHECK(s62.clean);
  for (int l = 4; l < 6; ++l) CHECK(count_induced_cl(b62.graph, l) == 0);

  // b_{5,2} hosts induced c5s (one per transversal) but nothing shorter
  Blowup b52 = blowup_cycle({5, 2});
  CHECK(count_induced_cl(b52.graph, 4) == 0);
  CHECK(count_induced_cl(b52.graph, 5) == 32);
}

TEST_CASE("transversal cycle hypergraph") {
  Blowup b52 = blowup_cycle({5, 2});
  TransversalHypergraph h = transversal_cycle_hypergraph(b52.graph, b52.parts);
  CHECK((long long)h.edges.size() == 32);  // f^k = 2^5
  for (const auto& tuple : h.edges) {
    REQUIRE(tuple.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(b52.parts[(std::size_t)i].contains(tuple[(std::size_t)i]));
    CHECK(induces_cycle(b52.graph, tuple));
  }

  Blowup b32 = blowup_cycle({3, 2});
  TransversalHypergraph t = transversal_cycle_hypergraph(b32.graph, b32.parts);
  CHECK((long long)t.edges.size() == 8);  // transversal triangles of k6

  for (int k = 5; k <= 7; ++k)
    for (int f = 1; f <= 3; ++f) {
      Blowup b = blowup_cycle({k, f});
      TransversalHypergraph th = transversal_cycle_hypergraph(b.graph, b.parts);
      long long expect = 1;
      for (int i = 0; i < k; ++i) expect *= f;
      CHECK((long long)th.edges.size() == expect);
    }

  // deleting a cross edge kills exactly f^(k-2) transversals
  Graph dented = b52.graph;
  dented.remove_edge(0, 2);  // part 0 to part 1
  TransversalHypergraph dh = transversal_cycle_hypergraph(dented, b52.parts);
  CHECK((long long)dh.edges.size() == 32 - 8);
}

TEST_CASE("single edit destruction bound") {
  DestructionScan d52 = exhaustive_single_edit_destruction(blowup_cycle({5, 2}));
  CHECK(d52.base == 32);
  CHECK(d52.per_edit_bound == 8);
  CHECK(d52.within_bound);
  CHECK(d52.worst_destroyed == 8);  // cross deletions reach the bound
  REQUIRE(d52.worst_pair.has_value());

  DestructionScan d53 = exhaustive_single_edit_destruction(blowup_cycle({5, 3}));
  CHECK(d53.base == 243);
  CHECK(d53.per_edit_bound == 27);
  CHECK(d53.within_bound);
  CHECK(d53.worst_destroyed <= 27);

  DestructionScan d61 = exhaustive_single_edit_destruction(blowup_cycle({6, 1}));
  CHECK(d61.base == 1);
  CHECK(d61.per_edit_bound == 1);
  CHECK(d61.within_bound);
}

TEST_CASE("resilience under random edits") {
  Rng rng(424242);
  ResilienceResult r = edit_resilience_check({5, 3}, 8, rng, 60);
  CHECK(r.ok);
  CHECK(r.base == 243);
  CHECK(r.floor == 243 - 8 * 27);
  CHECK(r.worst >= r.floor);
  CHECK(r.trials == 60);
  CHECK_FALSE(r.violating.has_value());

  Rng rng2(7);
  ResilienceResult tight = edit_resilience_check({6, 2}, 3, rng2, 40);
  CHECK(tight.ok);
  CHECK(tight.base == 64);
  CHECK(tight.floor == 64 - 3 * 16);

  Rng rng3(9);
  ResilienceResult noop = edit_resilience_check({5, 2}, 0, rng3, 5);
  CHECK(noop.ok);
  CHECK(noop.worst == 32);
  CHECK(noop.floor == 32);
  CHECK_THROWS_AS(edit_resilience_check({5, 2}, 4, rng3, 5), PreconditionError);  // m >= f^2
}

TEST_CASE("complete multipartite subhypergraph search") {
  Blowup b52 = blowup_cycle({5, 2});
  TransversalHypergraph h = transversal_cycle_hypergraph(b52.graph, b52.parts);
  auto full = find_complete_kpartite_subhypergraph(h, 2);
  REQUIRE(full.has_value());
  REQUIRE(full->size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK((*full)[(std::size_t)i].size() == 2);
    CHECK((*full)[(std::size_t)i].is_subset_of(b52.parts[(std::size_t)i]));
  }

  // with one transversal knocked out no complete 2^5 grid survives
  TransversalHypergraph dent = h;
  dent.edges.pop_back();
  CHECK_FALSE(find_complete_kpartite_subhypergraph(dent, 2).has_value());

  auto singleton = find_complete_kpartite_subhypergraph(h, 1);
  REQUIRE(singleton.has_value());
  for (const auto& u : *singleton) CHECK(u.size() == 1);

  Blowup b53 = blowup_cycle({5, 3});
  TransversalHypergraph h3 = transversal_cycle_hypergraph(b53.graph, b53.parts);
  CHECK_THROWS_AS(find_complete_kpartite_subhypergraph(h3, 3), BudgetError);
  Blowup b72 = blowup_cycle({7, 2});
  TransversalHypergraph h7 = transversal_cycle_hypergraph(b72.graph, b72.parts);
  CHECK_THROWS_AS(find_complete_kpartite_subhypergraph(h7, 2), BudgetError);
}

TEST_CASE("hard family assembly") {
  auto g_one = [](const Rational&) { return 1; };
  HardFamily plain = build_hard_family(g_one, 5, 5);
  CHECK(plain.c4 == corpus::cycle(4));
  REQUIRE(plain.members.size() == 1);
  CHECK(plain.members[0].k == 5);
  CHECK(plain.members[0].f == 1);
  CHECK(plain.members[0].eps == Rational(1, 50));
  CHECK(plain.members[0].graph == corpus::cycle(5));

  auto g_two = [](const Rational&) { return 2; };
  HardFamily fam = build_hard_family(g_two, 5, 6);
  REQUIRE(fam.members.size() == 2);
  CHECK(fam.members[0].graph.vertex_count() == 10);
  CHECK(fam.members[1].k == 6);
  CHECK(fam.members[1].eps == Rational(1, 72));
  for (const auto& m : fam.members) {
    CHECK(count_induced_c4(m.graph) == 0);  // members must not contain the base pattern
    CHECK(m.graph.edge_count() == blowup_edge_count({m.k, m.f}));
  }

  // the table sees the right epsilon for each k
  HardFamily scaled = build_hard_family(
      [](const Rational& e) { return e == Rational(1, 50) ? 3 : 2; }, 5, 6);
  CHECK(scaled.members[0].f == 3);
  CHECK(scaled.members[1].f == 2);

  CHECK_THROWS_AS(build_hard_family(g_one, 4, 6), PreconditionError);
  CHECK_THROWS_AS(build_hard_family(g_one, 6, 5), PreconditionError);
}

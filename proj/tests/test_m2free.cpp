#include <variant>

#include "c4lab/m2free.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace c4lab;

namespace {

BipartitePair pair_of(int nx, int ny) {
  return {corpus::range_set(0, nx), corpus::range_set(nx, nx + ny)};
}

// X = {0,1}, Y = {2,3}, cross edges 0-2 and 1-3 only.
Graph m2_config() {
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  return g;
}

}  // namespace

TEST_CASE("m2 witness search") {
  Graph g = m2_config();
  BipartitePair p = pair_of(2, 2);
  auto w = find_induced_m2(g, p);
  REQUIRE(w.has_value());
  CHECK(verify_m2_witness(g, p, *w));

  CHECK_FALSE(find_induced_m2(corpus::complete_bipartite(3, 4), pair_of(3, 4)).has_value());
  CHECK_FALSE(find_induced_m2(corpus::half_graph(4), pair_of(4, 4)).has_value());
  CHECK_FALSE(oracle::has_m2(corpus::half_graph(4), pair_of(4, 4).x, pair_of(4, 4).y));

  M2Witness bogus{0, 2, 1, 2};
  CHECK_FALSE(verify_m2_witness(g, p, bogus));

  Graph overlap(3);
  CHECK_THROWS_AS(validate_pair(overlap, {VertexSet({0, 1}), VertexSet({1, 2})}),
                  PreconditionError);
  CHECK_THROWS_AS(validate_pair(overlap, {VertexSet({0}), VertexSet({5})}), std::out_of_range);
}

TEST_CASE("nested order equivalence") {
  Graph half = corpus::half_graph(4);
  auto res = nested_order(half, pair_of(4, 4));
  REQUIRE(std::holds_alternative<NestedOrder>(res));
  CHECK(std::get<NestedOrder>(res).order == std::vector<int>({0, 1, 2, 3}));

  // equal neighbourhoods tie-break by index
  Graph twins(4);
  twins.add_edge(0, 2);
  twins.add_edge(0, 3);
  twins.add_edge(1, 2);
  twins.add_edge(1, 3);
  auto t = nested_order(twins, pair_of(2, 2));
  REQUIRE(std::holds_alternative<NestedOrder>(t));
  CHECK(std::get<NestedOrder>(t).order == std::vector<int>({0, 1}));

  auto m = nested_order(m2_config(), pair_of(2, 2));
  REQUIRE(std::holds_alternative<M2Witness>(m));
  CHECK(verify_m2_witness(m2_config(), pair_of(2, 2), std::get<M2Witness>(m)));

  for (int seed = 0; seed < 300; ++seed) {
    Rng rng((std::uint64_t)seed);
    int nx = (int)rng.int_in(1, 6), ny = (int)rng.int_in(1, 6);
    auto inst = corpus::random_pair(nx, ny, Rational(1, 2), rng, seed % 3 == 0);
    bool free_by_oracle = !oracle::has_m2(inst.g, inst.p.x, inst.p.y);
    auto r = nested_order(inst.g, inst.p);
    CHECK(std::holds_alternative<NestedOrder>(r) == free_by_oracle);
    CHECK(find_induced_m2(inst.g, inst.p).has_value() == !free_by_oracle);
    CHECK((count_induced_m2(inst.g, inst.p) == 0) == free_by_oracle);
    if (free_by_oracle) {
      const auto& ord = std::get<NestedOrder>(r).order;
      REQUIRE((int)ord.size() == nx);
      for (std::size_t i = 0; i + 1 < ord.size(); ++i)
        for (int yv : inst.p.y)
          if (inst.g.has_edge(ord[i], yv)) CHECK(inst.g.has_edge(ord[i + 1], yv));
    } else {
      CHECK(verify_m2_witness(inst.g, inst.p, std::get<M2Witness>(r)));
    }
  }
}

TEST_CASE("m2 counting") {
  CHECK(count_induced_m2(m2_config(), pair_of(2, 2)) == 1);
  CHECK(count_induced_m2(corpus::complete_bipartite(4, 4), pair_of(4, 4)) == 0);

  Graph iso(5);  // 2x2 matching plus an isolated y vertex
  iso.add_edge(0, 2);
  iso.add_edge(1, 3);
  CHECK(count_induced_m2(iso, pair_of(2, 3)) == 1);

  for (int seed = 0; seed < 100; ++seed) {
    Rng rng((std::uint64_t)(40 + seed));
    auto inst = corpus::random_pair(5, 5, Rational(1, 2), rng);
    CHECK(count_induced_m2(inst.g, inst.p) == oracle::count_m2(inst.g, inst.p.x, inst.p.y));
  }
}

TEST_CASE("pair partition on the half graph") {
  Graph half = corpus::half_graph(4);
  PairPartition pp = homog_pair_partition(half, pair_of(4, 4), 2);
  REQUIRE(pp.x_blocks.size() == 2);
  REQUIRE(pp.y_blocks.size() == 3);
  CHECK(pp.x_blocks[0] == VertexSet({0, 1}));
  CHECK(pp.x_blocks[1] == VertexSet({2, 3}));
  CHECK(pp.y_blocks[0] == VertexSet({4, 5}));
  CHECK(pp.y_blocks[1] == VertexSet({6, 7}));
  CHECK(pp.y_blocks[2].empty());
  CHECK(oracle::pair_relation(half, pp.x_blocks[0], pp.y_blocks[1]) == -1);
  CHECK(oracle::pair_relation(half, pp.x_blocks[1], pp.y_blocks[0]) == 1);
}

TEST_CASE("pair partition edge shapes") {
  Graph full = corpus::complete_bipartite(3, 3);
  PairPartition pp = homog_pair_partition(full, pair_of(3, 3), 1);
  CHECK(pp.x_blocks[0] == corpus::range_set(0, 3));
  CHECK(pp.y_blocks[0] == corpus::range_set(3, 6));
  CHECK(pp.y_blocks[1].empty());

  Graph none(5);
  PairPartition ep = homog_pair_partition(none, pair_of(3, 2), 2);
  CHECK(ep.y_blocks[0].empty());
  CHECK(ep.y_blocks[1].empty());
  CHECK(ep.y_blocks[2] == corpus::range_set(3, 5));

  // r above |X|: trailing empty X blocks, constraints vacuous
  PairPartition wide = homog_pair_partition(corpus::half_graph(2), pair_of(2, 2), 5);
  CHECK(wide.x_blocks.size() == 5);
  CHECK(wide.x_blocks[3].empty());
  CHECK(wide.y_blocks.size() == 6);

  CHECK_THROWS_AS(homog_pair_partition(none, pair_of(3, 2), 0), PreconditionError);
  CHECK_THROWS_AS(homog_pair_partition(none, pair_of(3, 2), 2000000), BudgetError);
  CHECK_THROWS_AS(homog_pair_partition(m2_config(), pair_of(2, 2), 1), PreconditionError);
}

TEST_CASE("pair partition homogeneity off the diagonal") {
  int checked = 0;
  for (int seed = 0; seed < 400 || checked < 120; ++seed) {
    Rng rng((std::uint64_t)(7000 + seed));
    int nx = (int)rng.int_in(1, 6), ny = (int)rng.int_in(1, 6);
    auto inst = corpus::random_pair(nx, ny, Rational(1, 3), rng);
    if (oracle::has_m2(inst.g, inst.p.x, inst.p.y)) continue;
    for (int r = 1; r <= 3; ++r) {
      PairPartition pp = homog_pair_partition(inst.g, inst.p, r);
      VertexSet xs, ys;
      for (const auto& b : pp.x_blocks) xs = xs.unite(b);
      for (const auto& b : pp.y_blocks) ys = ys.unite(b);
      CHECK(xs == inst.p.x);
      CHECK(ys == inst.p.y);
      for (std::size_t i = 0; i < pp.x_blocks.size(); ++i)
        for (std::size_t j = 0; j < pp.y_blocks.size(); ++j) {
          if (i == j || pp.x_blocks[i].empty() || pp.y_blocks[j].empty()) continue;
          int rel = oracle::pair_relation(inst.g, pp.x_blocks[i], pp.y_blocks[j]);
          CHECK(rel == (i > j ? 1 : -1));
        }
    }
    ++checked;
    if (seed > 4000) break;
  }
  CHECK(checked >= 120);
}

TEST_CASE("minimum edits to m2 freeness") {
  auto free_cost = min_edits_to_m2free(corpus::half_graph(4), pair_of(4, 4));
  CHECK(free_cost.edits == 0);
  CHECK(free_cost.edit_set.empty());
  CHECK(free_cost.mode == EditSearchMode::Exact);

  auto one = min_edits_to_m2free(m2_config(), pair_of(2, 2));
  CHECK(one.edits == 1);
  Graph fixed = apply_edits(m2_config(), one.edit_set);
  CHECK_FALSE(oracle::has_m2(fixed, pair_of(2, 2).x, pair_of(2, 2).y));

  // complete bipartite 3+3 minus a perfect matching, against the
  // permutation-suffix oracle
  Graph km = corpus::complete_bipartite(3, 3);
  km.remove_edge(0, 3);
  km.remove_edge(1, 4);
  km.remove_edge(2, 5);
  int by_orders = oracle::min_edits_m2_by_orders(km, pair_of(3, 3).x, pair_of(3, 3).y);
  auto res = min_edits_to_m2free(km, pair_of(3, 3));
  CHECK(res.edits == by_orders);
  CHECK_FALSE(oracle::has_m2(apply_edits(km, res.edit_set), pair_of(3, 3).x, pair_of(3, 3).y));

  for (int seed = 0; seed < 60; ++seed) {
    Rng rng((std::uint64_t)(80000 + seed));
    int nx = (int)rng.int_in(2, 5), ny = (int)rng.int_in(2, 5);
    auto inst = corpus::random_pair(nx, ny, Rational(1, 2), rng);
    auto r = min_edits_to_m2free(inst.g, inst.p);
    CHECK(r.edits == oracle::min_edits_m2_by_orders(inst.g, inst.p.x, inst.p.y));
    Graph after = apply_edits(inst.g, r.edit_set);
    CHECK_FALSE(oracle::has_m2(after, inst.p.x, inst.p.y));
    CHECK(r.edits == (int)r.edit_set.size());
    int brute = oracle::min_edits_m2(inst.g, inst.p.x, inst.p.y, 3);
    if (brute <= 3) CHECK(r.edits == brute);
  }

  Graph big(12);
  CHECK_THROWS_AS(min_edits_to_m2free(big, pair_of(10, 2)), BudgetError);
  auto h = min_edits_to_m2free(big, pair_of(10, 2), EditSearchMode::Heuristic);
  CHECK(h.mode == EditSearchMode::Heuristic);

  for (int seed = 0; seed < 25; ++seed) {
    Rng rng((std::uint64_t)(90000 + seed));
    auto inst = corpus::random_pair(7, 5, Rational(1, 2), rng);
    auto hr = min_edits_to_m2free(inst.g, inst.p, EditSearchMode::Heuristic);
    Graph after = apply_edits(inst.g, hr.edit_set);
    CHECK_FALSE(oracle::has_m2(after, inst.p.x, inst.p.y));
    auto ex = min_edits_to_m2free(inst.g, inst.p, EditSearchMode::Exact);
    CHECK(hr.edits >= ex.edits);
  }
}

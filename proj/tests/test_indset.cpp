#include "c4lab/indset.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace c4lab;

namespace {

long long antimatching_total(const IndsetEditResult& r) {
  long long total = 0;
  for (const auto& am : r.antimatchings) total += am.size();
  return total;
}

}  // namespace

TEST_CASE("maximal anti-matchings") {
  // y = 4 adjacent to a 3-clique: no non-edges
  Graph cl(5);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) cl.add_edge(u, v);
  for (int u = 0; u < 3; ++u) cl.add_edge(u, 4);
  AntiMatching empty_am = maximal_antimatching(cl, VertexSet::range(4), 4);
  CHECK(empty_am.size() == 0);
  verify_antimatching(cl, VertexSet::range(4), empty_am);

  // y adjacent to 4 pairwise non-adjacent vertices: perfect anti-matching
  Graph ind(5);
  for (int u = 0; u < 4; ++u) ind.add_edge(u, 4);
  AntiMatching perfect = maximal_antimatching(ind, VertexSet::range(4), 4);
  CHECK(perfect.size() == 2);
  verify_antimatching(ind, VertexSet::range(4), perfect);

  // neighbourhood {0,1,2} with only edge 0-1: greedy takes {0,2}
  Graph tri(4);
  tri.add_edge(0, 1);
  for (int u = 0; u < 3; ++u) tri.add_edge(u, 3);
  AntiMatching one = maximal_antimatching(tri, VertexSet::range(3), 3);
  REQUIRE(one.size() == 1);
  CHECK(one.pairs[0] == std::pair<int, int>(0, 2));
  verify_antimatching(tri, VertexSet::range(3), one);

  AntiMatching tampered = one;
  tampered.pairs.clear();  // maximality now fails: {0,2} is uncovered
  CHECK_THROWS_AS(verify_antimatching(tri, VertexSet::range(3), tampered), PreconditionError);
  AntiMatching edge = one;
  edge.pairs[0] = {0, 1};  // an edge, not a non-edge
  CHECK_THROWS_AS(verify_antimatching(tri, VertexSet::range(3), edge), PreconditionError);

  CHECK_THROWS_AS(maximal_antimatching(tri, VertexSet::range(3), 2), PreconditionError);
}

TEST_CASE("second neighbourhood pair count") {
  Graph tri(4);
  tri.add_edge(0, 1);
  for (int u = 0; u < 3; ++u) tri.add_edge(u, 3);
  CHECK(d2(tri, VertexSet::range(3), 3) == 2);

  Graph cl(5);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) cl.add_edge(u, v);
  for (int u = 0; u < 3; ++u) cl.add_edge(u, 4);
  CHECK(d2(cl, VertexSet::range(4), 4) == 0);

  for (int seed = 0; seed < 40; ++seed) {
    Rng rng((std::uint64_t)(7100 + seed));
    Graph g = random_graph(10, Rational(1, 2), rng);
    VertexSet x = corpus::range_set(0, 9);
    CHECK(d2(g, x, 9) == oracle::d2(g, x, 9));
  }
}

TEST_CASE("family descriptors") {
  FamilyDescriptor c4only{FamilyKind::C4Only};
  FamilyDescriptor chordal{FamilyKind::ChordalFamily};
  CHECK(std::string(c4only.name()) == "c4-only");
  CHECK(std::string(chordal.name()) == "chordal-family");

  CHECK(c4only.is_free(corpus::cycle(5)));
  CHECK_FALSE(chordal.is_free(corpus::cycle(5)));
  CHECK_FALSE(c4only.is_free(corpus::cycle(4)));
  auto v = chordal.find_violation(corpus::cycle(6));
  REQUIRE(v.has_value());
  CHECK(induces_cycle(corpus::cycle(6), *v));
  CHECK_FALSE(c4only.find_violation(corpus::complete(5)).has_value());

  // cycles of length >= 4 never have clique neighbourhoods
  CHECK(neighborhoods_never_cliques(corpus::cycle(4)));
  CHECK(neighborhoods_never_cliques(corpus::cycle(6)));
  CHECK_FALSE(neighborhoods_never_cliques(corpus::complete(3)));
  CHECK_FALSE(neighborhoods_never_cliques(corpus::path(3)));
}

TEST_CASE("editing toward an independent y") {
  // no cross edges: nothing to do
  Graph split(6);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) split.add_edge(u, v);
  FamilyDescriptor fam{FamilyKind::C4Only};
  IndsetEditResult nothing =
      indset_edit(split, corpus::range_set(0, 3), corpus::range_set(3, 6), fam);
  CHECK(nothing.edits.empty());
  CHECK(nothing.edited == split);

  // x = {0,1,2} with edge 0-1, both y vertices adjacent to all of x:
  // each anti-matching is {{0,2}}, four deletions, result c4-free
  Graph two(5);
  two.add_edge(0, 1);
  for (int y = 3; y < 5; ++y)
    for (int u = 0; u < 3; ++u) two.add_edge(u, y);
  REQUIRE(oracle::count_c4(two) == 2);  // {0,2} and {1,2} each see both y
  IndsetEditResult fixed = indset_edit(two, corpus::range_set(0, 3), corpus::range_set(3, 5), fam);
  CHECK(fixed.edits.size() == 4);
  CHECK(oracle::count_c4(fixed.edited) == 0);
  for (const auto& am : fixed.antimatchings) {
    REQUIRE(am.size() == 1);
    CHECK(am.pairs[0] == std::pair<int, int>(0, 2));
  }
  for (const Edit& e : fixed.edits) CHECK(e.kind == EditKind::Delete);

  // complete split cross: every neighbourhood is a clique
  Graph comp(6);
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) comp.add_edge(u, v);
  for (int u = 0; u < 3; ++u)
    for (int y = 3; y < 6; ++y) comp.add_edge(u, y);
  IndsetEditResult untouched =
      indset_edit(comp, corpus::range_set(0, 3), corpus::range_set(3, 6), fam);
  CHECK(untouched.edits.empty());

  // precondition violations carry witnesses
  Graph bady(4);
  bady.add_edge(2, 3);
  CHECK_THROWS_AS(indset_edit(bady, corpus::range_set(0, 2), corpus::range_set(2, 4), fam),
                  PreconditionError);
  Graph badx = corpus::cycle(4);
  Graph host(6);
  for (auto [u, v] : badx.edges()) host.add_edge(u, v);
  CHECK_THROWS_AS(indset_edit(host, corpus::range_set(0, 4), corpus::range_set(4, 6), fam),
                  PreconditionError);
  CHECK_THROWS_AS(indset_edit(split, VertexSet({0, 1}), corpus::range_set(3, 6), fam),
                  PreconditionError);
}

TEST_CASE("edit identities on seeded instances") {
  for (int seed = 0; seed < 120; ++seed) {
    Rng rng((std::uint64_t)(8200 + seed));
    bool chordal_side = seed % 2 == 1;
    auto inst = corpus::random_indset_instance(7, 5, chordal_side, rng);
    FamilyDescriptor fam{chordal_side ? FamilyKind::ChordalFamily : FamilyKind::C4Only};
    IndsetEditResult r = indset_edit(inst.g, inst.x, inst.y, fam);

    CHECK((long long)r.edits.size() == 2 * antimatching_total(r));
    CHECK(fam.is_free(r.edited));
    if (chordal_side)
      CHECK(oracle::is_chordal(r.edited));
    else
      CHECK(oracle::count_c4(r.edited) == 0);

    REQUIRE((int)r.antimatchings.size() == inst.y.size());
    for (int i = 0; i < inst.y.size(); ++i) {
      const AntiMatching& am = r.antimatchings[(std::size_t)i];
      CHECK(am.owner == inst.y[i]);
      verify_antimatching(inst.g, inst.x, am);
      long long m = am.size();
      CHECK(2 * oracle::d2(inst.g, inst.x, am.owner) >= m * m);
    }
    // only cross deletions
    for (const Edit& e : r.edits) {
      CHECK(e.kind == EditKind::Delete);
      CHECK(inst.x.contains(e.u) != inst.x.contains(e.v));
    }

    // the freeness conclusion survives a shuffled greedy order
    Rng shuffle((std::uint64_t)(991 + seed));
    IndsetEditResult rs = indset_edit(inst.g, inst.x, inst.y, fam, &shuffle);
    CHECK(fam.is_free(rs.edited));
    CHECK((long long)rs.edits.size() == 2 * antimatching_total(rs));
  }
}

TEST_CASE("c4 lower bound certificate") {
  // complete cross bipartite: x pairs all adjacent after completing x? no:
  // x = two adjacent vertices, no non-adjacent pair, certificate 0
  Graph comp = corpus::complete_bipartite(2, 2);
  comp.add_edge(0, 1);
  C4LowerBoundCertificate zero =
      c4_lower_bound_certificate(comp, corpus::range_set(0, 2), corpus::range_set(2, 4));
  CHECK(zero.certified_count == 0);
  CHECK(zero.t_sum == 0);

  // K_{2,2}: one non-adjacent x pair with t = 2
  Graph k22 = corpus::complete_bipartite(2, 2);
  C4LowerBoundCertificate one =
      c4_lower_bound_certificate(k22, corpus::range_set(0, 2), corpus::range_set(2, 4));
  CHECK(one.certified_count == 1);
  CHECK(one.t_sum == 2);
  CHECK(count_induced_c4(k22) == 1);

  for (int seed = 0; seed < 80; ++seed) {
    Rng rng((std::uint64_t)(9300 + seed));
    auto inst = corpus::random_indset_instance(6, 5, false, rng);
    C4LowerBoundCertificate cert = c4_lower_bound_certificate(inst.g, inst.x, inst.y);
    CHECK(cert.certified_count <= oracle::count_c4(inst.g));
    CHECK(Rational(cert.certified_count) >= cert.jensen_bound);
    long long d2_total = 0;
    for (int y : inst.y) d2_total += oracle::d2(inst.g, inst.x, y);
    CHECK(cert.t_sum == d2_total);  // double counting across the bipartition
  }

  Graph bady(4);
  bady.add_edge(2, 3);
  CHECK_THROWS_AS(
      c4_lower_bound_certificate(bady, corpus::range_set(0, 2), corpus::range_set(2, 4)),
      PreconditionError);
}

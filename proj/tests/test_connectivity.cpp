#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "drdlab/connectivity.hpp"
#include "drdlab/constructions.hpp"
#include "support/oracles.hpp"

using namespace drdlab;

namespace {

oracle::edge_set as_pairs(const std::vector<edge>& edges) {
  oracle::edge_set out;
  for (const edge& e : edges) out.push_back({e.from, e.to});
  return out;
}

}  // namespace

TEST_CASE("max flow") {
  digraph c5 = directed_cycle(5);
  CHECK(max_flow(c5, 0, 3).value == 1);
  CHECK(max_flow(undirected_cycle(6), 0, 3).value == 2);

  // block cycle: two units of flow from the first block into the second,
  // matching the brute-force subset bound
  digraph bc = block_cycle(3, 2);
  max_flow_result r = max_flow(bc, 0, 2);
  CHECK(r.value == 2);
  CHECK(r.value == oracle::min_st_cut_value(bc, 0, 2));
  CHECK(static_cast<int>(r.crossing.size()) == r.value);

  CHECK_THROWS_AS(max_flow(c5, 2, 2), error);
}

TEST_CASE("edge connectivity") {
  for (int n = 2; n <= 8; ++n) CHECK(edge_connectivity(directed_cycle(n)) == 1);
  for (int n = 3; n <= 8; ++n) CHECK(edge_connectivity(undirected_cycle(n)) == 2);
  for (int t = 2; t <= 4; ++t)
    for (int rho = 1; rho <= 3; ++rho) CHECK(edge_connectivity(block_cycle(t, rho)) == rho);
  for (int n = 2; n <= 7; ++n) CHECK(edge_connectivity(gamma_n(n)) == 2);

  CHECK_THROWS_AS(edge_connectivity(digraph::from_edges(3, {{0, 1}, {1, 2}})), error);
  CHECK_THROWS_AS(edge_connectivity(digraph::from_edges(1, {})), error);

  // bounded by the minimum out-degree: the out-star is always a cut
  for (const digraph& g : {block_cycle(4, 3), gamma_n(6), find_srd(8, 3, 2, 1, 1)[0]}) {
    int min_out = g.order();
    for (int v = 0; v < g.order(); ++v) min_out = std::min(min_out, g.out_degree(v));
    CHECK(edge_connectivity(g) <= min_out);
  }
}

TEST_CASE("minimum edge cut enumeration") {
  // directed triangle: three single-edge cuts, each a star both ways
  digraph c3 = directed_cycle(3);
  std::vector<edge_cut> cuts = enumerate_min_edge_cuts(c3);
  REQUIRE(cuts.size() == 3);
  for (const edge_cut& cut : cuts) {
    CHECK(cut.size == 1);
    cut_class c = classify_edge_cut(c3, cut);
    CHECK(c.tag == cut_tag::out_star);
    CHECK(c.both);
  }

  // undirected 4-cycle: opposite-edge cuts are non-trivial
  digraph u4 = undirected_cycle(4);
  bool found_nontrivial = false;
  for (const edge_cut& cut : enumerate_min_edge_cuts(u4))
    if (classify_edge_cut(u4, cut).tag == cut_tag::non_trivial) found_nontrivial = true;
  CHECK(found_nontrivial);

  // the exceptional (6,2,1,0,1) digraph has a non-trivial cut of size 2
  digraph srd6 = find_srd(6, 2, 1, 0, 1)[0];
  bool nontrivial2 = false;
  for (const edge_cut& cut : enumerate_min_edge_cuts(srd6))
    if (cut.size == 2 && classify_edge_cut(srd6, cut).tag == cut_tag::non_trivial)
      nontrivial2 = true;
  CHECK(nontrivial2);
}

TEST_CASE("enumeration matches the subset oracle") {
  std::vector<digraph> samples = {directed_cycle(5), undirected_cycle(4),  undirected_cycle(6),
                                  block_cycle(3, 2), block_cycle(2, 3),    gamma_n(4),
                                  gamma_n(5),        find_srd(6, 2, 1, 0, 1)[0]};
  for (const digraph& g : samples) {
    std::set<oracle::edge_set> expect = oracle::min_edge_cuts(g);
    std::set<oracle::edge_set> got;
    for (const edge_cut& cut : enumerate_min_edge_cuts(g)) {
      got.insert(as_pairs(cut.crossing));
      // the canonical side regenerates the same crossing set
      std::vector<char> in_a(g.order(), 0);
      for (int v : cut.side_a) in_a[v] = 1;
      oracle::edge_set crossing;
      for (const edge& e : g.edges())
        if (in_a[e.from] && !in_a[e.to]) crossing.push_back({e.from, e.to});
      CHECK(crossing == as_pairs(cut.crossing));
      // every recorded bipartition also generates it
      for (const auto& side : cut.generating_sides) {
        std::vector<char> in_b(g.order(), 0);
        for (int v : side) in_b[v] = 1;
        oracle::edge_set cross2;
        for (const edge& e : g.edges())
          if (in_b[e.from] && !in_b[e.to]) cross2.push_back({e.from, e.to});
        CHECK(cross2 == as_pairs(cut.crossing));
      }
    }
    CHECK(got == expect);
  }
}

TEST_CASE("enumeration matches the subset oracle on random digraphs") {
  std::mt19937_64 eng(2024);
  int tested = 0;
  while (tested < 40) {
    int n = 3 + static_cast<int>(eng() % 6);  // 3..8
    std::vector<edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && eng() % 100 < 35) edges.push_back({u, v});
    digraph g = digraph::from_edges(n, edges);
    if (!g.is_strongly_connected()) continue;
    ++tested;

    std::set<oracle::edge_set> expect = oracle::min_edge_cuts(g);
    std::set<oracle::edge_set> got;
    for (const edge_cut& cut : enumerate_min_edge_cuts(g)) got.insert(as_pairs(cut.crossing));
    CHECK(got == expect);

    int s = static_cast<int>(eng() % n);
    int t = static_cast<int>(eng() % n);
    if (s != t) CHECK(max_flow(g, s, t).value == oracle::min_st_cut_value(g, s, t));

    if (g.edge_count() < n * (n - 1)) {
      std::set<std::vector<int>> vexpect = oracle::min_vertex_cuts(g);
      std::set<std::vector<int>> vgot;
      for (const vertex_cut& cut : enumerate_min_vertex_cuts(g)) vgot.insert(cut.vertices);
      CHECK(vgot == vexpect);
    }
  }
}

TEST_CASE("edge cut classification") {
  digraph bc = block_cycle(3, 2);
  edge_cut star;
  star.crossing = {{0, 2}, {0, 3}};
  star.size = 2;
  cut_class c = classify_edge_cut(bc, star);
  CHECK(c.tag == cut_tag::out_star);
  CHECK(c.vertex == 0);
  CHECK_FALSE(c.both);

  // the two-cycles-with-rungs family has a cut taking one edge from each
  // cycle; it is no vertex's star
  digraph g5 = gamma_n(5);
  edge_cut rung_cut;
  rung_cut.crossing = {{0, 1}, {5, 9}};
  rung_cut.size = 2;
  CHECK(classify_edge_cut(g5, rung_cut).tag == cut_tag::non_trivial);
  bool enumerated = false;
  for (const edge_cut& cut : enumerate_min_edge_cuts(g5))
    if (cut.crossing == rung_cut.crossing) {
      enumerated = true;
      CHECK(cut.side_a == std::vector<int>{0, 5});
    }
  CHECK(enumerated);

  // single-edge cut in a 1-regular digraph is a star both ways
  digraph c4 = directed_cycle(4);
  edge_cut single;
  single.crossing = {{1, 2}};
  single.size = 1;
  cut_class sc = classify_edge_cut(c4, single);
  CHECK(sc.tag == cut_tag::out_star);
  CHECK(sc.vertex == 1);
  CHECK(sc.both);

  // a non-disconnecting edge set is rejected
  edge_cut bogus;
  bogus.crossing = {{0, 2}};
  bogus.size = 1;
  CHECK_THROWS_AS(classify_edge_cut(bc, bogus), error);
}

TEST_CASE("cut balance") {
  // single-vertex side of a k-regular digraph: k out, k in
  digraph bc = block_cycle(4, 3);
  std::vector<int> one{5};
  CHECK(check_cut_balance(bc, one));

  // every subset of a regular digraph balances
  std::mt19937_64 eng(99);
  for (const digraph& g : {block_cycle(3, 2), gamma_n(6), undirected_cycle(7)}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> side;
      for (int v = 0; v < g.order(); ++v)
        if (eng() & 1) side.push_back(v);
      if (side.empty() || static_cast<int>(side.size()) == g.order()) continue;
      CHECK(check_cut_balance(g, side));
    }
  }

  digraph path = digraph::from_edges(3, {{0, 1}, {1, 2}});
  std::vector<int> a{0};
  CHECK_THROWS_AS(check_cut_balance(path, a), error);  // not regular
  std::vector<int> empty_side;
  CHECK_THROWS_AS(check_cut_balance(bc, empty_side), error);
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(directed_cycle(6)) == 1);
  CHECK(vertex_connectivity(undirected_cycle(6)) == 2);
  CHECK(vertex_connectivity(gamma_n(5)) == 2);

  digraph srd8 = find_srd(8, 3, 2, 1, 1)[0];
  CHECK(vertex_connectivity(srd8) == 2);
  std::vector<vertex_cut> cuts = enumerate_min_vertex_cuts(srd8);
  bool nontrivial = false;
  for (const vertex_cut& cut : cuts)
    if (classify_vertex_cut(srd8, cut).tag == cut_tag::non_trivial) nontrivial = true;
  CHECK(nontrivial);

  // complete digraphs cannot be separated
  digraph k3 = digraph::from_edges(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
  CHECK_THROWS_AS(vertex_connectivity(k3), error);
  CHECK_THROWS_AS(enumerate_min_vertex_cuts(k3), error);
}

TEST_CASE("vertex cut enumeration matches the subset oracle") {
  std::vector<digraph> samples = {directed_cycle(5), undirected_cycle(6), block_cycle(3, 2),
                                  gamma_n(4), find_srd(8, 3, 2, 1, 1)[0],
                                  find_srd(6, 2, 1, 0, 1)[0]};
  for (const digraph& g : samples) {
    std::set<std::vector<int>> expect = oracle::min_vertex_cuts(g);
    std::set<std::vector<int>> got;
    for (const vertex_cut& cut : enumerate_min_vertex_cuts(g)) got.insert(cut.vertices);
    CHECK(got == expect);
    CHECK(vertex_connectivity(g) == oracle::vertex_connectivity(g));
  }
}

TEST_CASE("vertex cut classification") {
  digraph u5 = undirected_cycle(5);
  vertex_cut nb;
  nb.vertices = {1, 4};  // the two neighbors of vertex 0
  nb.size = 2;
  cut_class c = classify_vertex_cut(u5, nb);
  CHECK(c.tag == cut_tag::out_neighborhood);
  CHECK(c.vertex == 0);
  CHECK(c.both);  // undirected: in- and out-neighborhoods coincide

  digraph srd8 = find_srd(8, 3, 2, 1, 1)[0];
  for (const vertex_cut& cut : enumerate_min_vertex_cuts(srd8))
    CHECK(classify_vertex_cut(srd8, cut).tag == cut_tag::non_trivial);

  vertex_cut bogus;
  bogus.vertices = {0};
  bogus.size = 1;
  CHECK_THROWS_AS(classify_vertex_cut(u5, bogus), error);  // does not disconnect
}

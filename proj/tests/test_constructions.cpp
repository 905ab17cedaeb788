#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "drdlab/constructions.hpp"
#include "drdlab/regularity.hpp"
#include "support/oracles.hpp"

using namespace drdlab;

TEST_CASE("cycles") {
  digraph c3 = directed_cycle(3);
  CHECK(c3.girth() == 3);
  CHECK(c3.regular_degree() == 1);

  CHECK(*srd_parameters(undirected_cycle(4)) == srd_params{4, 2, 2, 0, 2});
  CHECK(*srd_parameters(undirected_cycle(5)) == srd_params{5, 2, 2, 0, 1});

  CHECK_THROWS_AS(directed_cycle(1), error);
  CHECK_THROWS_AS(undirected_cycle(2), error);
}

TEST_CASE("block cycles") {
  CHECK(block_cycle(3, 1) == directed_cycle(3));

  digraph bc = block_cycle(3, 2);
  CHECK(bc.regular_degree() == 2);
  auto ir = intersection_numbers(bc);
  REQUIRE(ir.ok());
  CHECK(ir.table->lambda() == 0);

  // t = 2 degenerates to a fully undirected complete bipartite digraph
  digraph b22 = block_cycle(2, 2);
  CHECK(b22.is_undirected());
  CHECK(b22.girth() == 2);
  CHECK(isomorphic(b22, undirected_cycle(4)));

  CHECK_THROWS_AS(block_cycle(1, 2), error);
  CHECK_THROWS_AS(block_cycle(3, 0), error);
}

TEST_CASE("lifts") {
  CHECK(isomorphic(damerell_lift(directed_cycle(3), 2), block_cycle(3, 2)));
  CHECK(isomorphic(damerell_lift(directed_cycle(2), 2), block_cycle(2, 2)));

  // lambda scaling and girth preservation over short-type bases
  for (int n = 3; n <= 5; ++n) {
    digraph base = directed_cycle(n);
    int base_lambda = intersection_numbers(base).table->lambda();
    for (int m = 2; m <= 3; ++m) {
      digraph lifted = damerell_lift(base, m);
      auto ir = intersection_numbers(lifted);
      REQUIRE(ir.ok());
      CHECK(ir.table->lambda() == m * base_lambda);
      CHECK(lifted.girth() == base.girth());
      CHECK(drd_type(lifted) == drd_kind::long_type);
    }
  }

  CHECK_THROWS_AS(damerell_lift(directed_cycle(3), 1), error);
}

TEST_CASE("antipodal quotients") {
  CHECK(isomorphic(antipodal_quotient(block_cycle(3, 2)), directed_cycle(3)));
  CHECK(isomorphic(antipodal_quotient(damerell_lift(directed_cycle(5), 3)), directed_cycle(5)));

  // round trip over short-type bases
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m <= 3; ++m)
      CHECK(isomorphic(antipodal_quotient(damerell_lift(directed_cycle(n), m)),
                       directed_cycle(n)));

  // short-type input has D = g - 1: rejected
  CHECK_THROWS_AS(antipodal_quotient(directed_cycle(5)), error);
  // girth-2 input: rejected
  CHECK_THROWS_AS(antipodal_quotient(undirected_cycle(6)), error);
}

TEST_CASE("gamma family") {
  digraph g3 = gamma_n(3);
  CHECK(g3.order() == 6);
  CHECK(g3.regular_degree() == 2);
  CHECK(g3.diameter() == 2);

  CHECK(gamma_n(4).diameter() == 3);

  for (int n = 2; n <= 10; ++n) {
    digraph g = gamma_n(n);
    CHECK(g.order() == 2 * n);
    CHECK(g.regular_degree() == 2);
    CHECK(g.is_strongly_connected());
    CHECK(g.girth() == 2);
    CHECK(is_weakly_distance_regular(g));
    CHECK(g.diameter() == n / 2 + 1);
    if (n >= 3) CHECK_FALSE(g.is_undirected());
  }

  // the smallest member is the undirected 4-cycle
  CHECK(isomorphic(gamma_n(2), undirected_cycle(4)));
  CHECK_THROWS_AS(gamma_n(1), error);
}

TEST_CASE("parameter-driven search") {
  auto srd6 = find_srd(6, 2, 1, 0, 1);
  REQUIRE(srd6.size() == 1);  // unique up to isomorphism
  CHECK(*srd_parameters(srd6[0]) == srd_params{6, 2, 1, 0, 1});
  CHECK(isomorphic(srd6[0], gamma_n(3)));

  auto srd8 = find_srd(8, 3, 2, 1, 1);
  REQUIRE(srd8.size() == 1);
  CHECK(*srd_parameters(srd8[0]) == srd_params{8, 3, 2, 1, 1});
  // these parameters force A^2 == I + J entrywise
  walk_matrix sq = walk_counts(srd8[0], 2);
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) CHECK(sq.at(u, v) == (u == v ? 2u : 1u));

  auto srd4 = find_srd(4, 2, 2, 0, 2);
  REQUIRE(srd4.size() == 1);
  CHECK(isomorphic(srd4[0], undirected_cycle(4)));

  auto srd5 = find_srd(5, 2, 2, 0, 1);
  REQUIRE(srd5.size() == 1);
  CHECK(isomorphic(srd5[0], undirected_cycle(5)));

  // infeasible parameters give an empty list, not an error
  CHECK(find_srd(5, 2, 0, 0, 0).empty());

  // out-of-bounds parameters are rejected
  CHECK_THROWS_AS(find_srd(5, 2, 3, 0, 1), error);   // t > k
  CHECK_THROWS_AS(find_srd(5, 5, 0, 0, 1), error);   // k > n-1
  CHECK_THROWS_AS(find_srd(5, 2, 0, -1, 1), error);  // negative

  // outputs are pairwise non-isomorphic
  for (std::size_t i = 0; i < srd6.size(); ++i)
    for (std::size_t j = i + 1; j < srd6.size(); ++j)
      CHECK_FALSE(isomorphic(srd6[i], srd6[j]));
}

TEST_CASE("isomorphism") {
  std::vector<digraph> samples = {directed_cycle(7), undirected_cycle(6), block_cycle(3, 2),
                                  gamma_n(5), find_srd(8, 3, 2, 1, 1)[0]};
  // random relabelings are recognized
  for (const digraph& g : samples)
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      CHECK(isomorphic(g, oracle::relabel(g, seed)));

  // edge counts differ
  CHECK_FALSE(isomorphic(directed_cycle(4), undirected_cycle(4)));
  // same order, same degrees, different girth
  CHECK_FALSE(isomorphic(gamma_n(3), block_cycle(3, 2)));
  // different orders
  CHECK_FALSE(isomorphic(directed_cycle(4), directed_cycle(5)));
}

TEST_CASE("regular digraph enumeration") {
  // all 1-regular strongly connected digraphs on n vertices are the
  // directed n-cycles
  int count = 0;
  enumerate_k_regular(4, 1, false, [&](const digraph& g) {
    if (g.is_strongly_connected()) {
      ++count;
      CHECK(isomorphic(g, directed_cycle(4)));
    }
    return true;
  });
  CHECK(count == 6);  // (n-1)! labeled directed Hamiltonian cycles at n = 4

  // fixing the first row retains one representative per isomorphism class
  bool found_bc32 = false;
  enumerate_k_regular(6, 2, true, [&](const digraph& g) {
    if (g.is_strongly_connected() && isomorphic(g, block_cycle(3, 2))) found_bc32 = true;
    return true;
  });
  CHECK(found_bc32);

  CHECK_THROWS_AS(enumerate_k_regular(4, 4, false, [](const digraph&) { return true; }), error);
}

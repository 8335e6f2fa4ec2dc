#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "properties.hpp"
#include "srgforge/cliques.hpp"
#include "srgforge/search.hpp"

using namespace srgforge;

TEST(Refinement, EquitablePartition) {
  // A path on 5 vertices: ends, next-to-ends, centre.
  const auto cells = equitable_partition(path_graph(5));
  EXPECT_EQ(cells.size(), 3U);
  EXPECT_EQ(equitable_partition(petersen_graph()).size(), 1U);
}

TEST(Automorphisms, SmallGraphsAgreeWithBruteForce) {
  std::mt19937_64 rng(11);
  std::vector<Graph> graphs{petersen_graph(), cycle_graph(7), complete_graph(6), path_graph(6), Graph(5)};
  for (int i = 0; i < 30; ++i) graphs.push_back(props::random_graph(7 + i % 2, 0.3 + 0.02 * i, rng));
  for (const auto& g : graphs) {
    const auto aut = automorphism_group(g);
    EXPECT_TRUE(aut.complete);
    EXPECT_EQ(aut.order(), oracle::automorphism_count(g)) << graph6_encode(g);
    for (const auto& gen : aut.group.generators()) EXPECT_TRUE(g.is_automorphism(gen));
  }
}

TEST(Automorphisms, KnownOrders) {
  EXPECT_EQ(automorphism_group(petersen_graph()).order(), 120U);
  EXPECT_EQ(automorphism_group(triangular_graph(8)).order(), 40320U);
  EXPECT_EQ(automorphism_group(cycle_graph(12)).order(), 24U);
  EXPECT_EQ(automorphism_group(complete_graph(10)).order(), 3628800U);
}

TEST(Isomorphism, RelabelledCopies) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const Graph g = props::random_graph(30, 0.5, rng);
    const auto p = props::random_permutation(30, rng);
    const Graph h = g.relabelled(p);
    const auto r = find_isomorphism(g, h);
    ASSERT_TRUE(r.isomorphic);
    ASSERT_TRUE(r.mapping);
    EXPECT_EQ(g.relabelled(*r.mapping), h);
    EXPECT_EQ(invariant_fingerprint(g), invariant_fingerprint(h));
  }
  const Graph t8 = triangular_graph(8);
  EXPECT_TRUE(are_isomorphic(t8, t8.relabelled(props::random_permutation(28, rng))));
}

TEST(Isomorphism, DistinguishesNonIsomorphic) {
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), path_graph(6)));
  EXPECT_FALSE(are_isomorphic(cycle_graph(5), cycle_graph(6)));
  // Two 3-regular graphs on 6 vertices: K3,3 and the prism.
  Graph k33(6), prism(6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 3; j < 6; ++j) k33.add_edge(i, j);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    prism.add_edge(i, (i + 1) % 3);
    prism.add_edge(i + 3, (i + 1) % 3 + 3);
    prism.add_edge(i, i + 3);
  }
  EXPECT_FALSE(are_isomorphic(k33, prism));
}

TEST(Isomorphism, BudgetIsEnforced) {
  const Graph t = triangular_graph(8);
  EXPECT_THROW(find_isomorphism(t, t.relabelled(Permutation::from_cycles("(1,2)", 28)), 1), BoundExceeded);
}

TEST(Cliques, AgreeWithBruteForce) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const Graph g = props::random_graph(25, 0.5, rng);
    for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(count_cliques(g, k, 1), oracle::cliques(g, k)) << k;
    EXPECT_EQ(count_cliques(g, 4, 3), count_cliques(g, 4, 1));
  }
  EXPECT_EQ(count_cliques(complete_graph(10), 4), 210U);
  EXPECT_EQ(count_cliques(petersen_graph(), 3), 0U);
  EXPECT_EQ(count_cliques(triangular_graph(8), 7), 8U);
  EXPECT_THROW(count_cliques(Graph(3), 0), InputError);
}

TEST(Cliques, DegeneracyOrderIsAPermutation) {
  auto order = degeneracy_order(path_graph(6));
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i);
}

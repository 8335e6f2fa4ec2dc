#include <gtest/gtest.h>

#include <filesystem>

#include "oracles.hpp"
#include "srgforge/graph.hpp"
#include "srgforge/graph6.hpp"

using namespace srgforge;

TEST(Graph, NamedGraphs) {
  EXPECT_EQ(is_strongly_regular(petersen_graph()), (SrgParams{10, 3, 0, 1}));
  EXPECT_EQ(is_strongly_regular(cycle_graph(5)), (SrgParams{5, 2, 0, 1}));
  EXPECT_EQ(is_strongly_regular(triangular_graph(8)), (SrgParams{28, 12, 6, 4}));
  EXPECT_FALSE(is_strongly_regular(cycle_graph(6)));
  EXPECT_FALSE(is_strongly_regular(complete_graph(5)));
  EXPECT_FALSE(is_strongly_regular(Graph(5)));
  EXPECT_FALSE(is_strongly_regular(path_graph(4)));
}

TEST(Graph, EdgesAndRelabelling) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_THROW(g.add_edge(2, 2), InputError);
  EXPECT_THROW(g.add_edge(0, 4), InputError);
  const auto p = Permutation::from_cycles("(1,4)", 4);
  const Graph h = g.relabelled(p);
  EXPECT_TRUE(h.adjacent(3, 1));
  EXPECT_FALSE(h.adjacent(0, 1));
  EXPECT_FALSE(g.is_automorphism(p));
  EXPECT_TRUE(g.is_automorphism(Permutation::from_cycles("(1,3)", 4)));
  g.remove_edge(0, 1);
  EXPECT_EQ(g.edge_count(), 1U);
}

TEST(Graph, RegularityProfile) {
  const auto prof = regularity_profile(cycle_graph(6));
  EXPECT_TRUE(prof.regular);
  EXPECT_EQ(prof.k, 2);
  EXPECT_EQ(prof.lambda, 0);
  EXPECT_FALSE(prof.mu);
}

TEST(Graph, Feasibility) {
  const auto e = srg_feasibility({10, 3, 0, 1});
  EXPECT_TRUE(e.integral);
  EXPECT_EQ(e.r, 1);
  EXPECT_EQ(e.s, -2);
  EXPECT_EQ(e.f, 5);
  EXPECT_EQ(e.g, 4);
  EXPECT_FALSE(srg_feasibility({5, 2, 0, 1}).integral);  // conference graph
  EXPECT_TRUE(is_feasible({5, 2, 0, 1}));
  EXPECT_THROW(srg_feasibility({10, 3, 0, 2}), InputError);
  EXPECT_FALSE(is_feasible({5, 3, 1, 3}));  // multiplicities not integral
  EXPECT_THROW(srg_feasibility({5, 3, 1, 3}), InfeasibleParameters);
  EXPECT_TRUE(is_feasible({28, 9, 0, 4}));  // passes the eigenvalue test, does not exist
  const auto list = feasible_parameters(540, 187);
  EXPECT_NE(std::find(list.begin(), list.end(), SrgParams{540, 187, 58, 68}), list.end());
  EXPECT_EQ(SrgParams({540, 187, 58, 68}).complement(), (SrgParams{540, 352, 232, 224}));
}

TEST(Graph, MatrixIdentity) {
  const Graph g = triangular_graph(7);
  const SrgParams p{21, 10, 5, 4};
  EXPECT_TRUE(satisfies_srg_matrix_identity(g, p));
  EXPECT_FALSE(satisfies_srg_matrix_identity(g, {21, 10, 5, 5}));
  const std::vector<std::size_t> rows{0, 5, 20};
  EXPECT_TRUE(satisfies_srg_matrix_identity(g, p, rows));
  std::vector<std::size_t> all(21);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(oracle::matrix_identity(g, p, all));
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(petersen_graph()), "IheA@GUAo");
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
  EXPECT_EQ(graph6_encode(complete_graph(4)), "C~");
  EXPECT_EQ(graph6_decode("IheA@GUAo"), petersen_graph());
  const Graph big(100);
  EXPECT_EQ(graph6_encode(big).substr(0, 4), "~?@c");
  EXPECT_EQ(graph6_decode(graph6_encode(big)), big);
}

TEST(Graph6, RejectsCorruptInput) {
  EXPECT_THROW(graph6_decode(""), InputError);
  EXPECT_THROW(graph6_decode("C"), InputError);
  EXPECT_THROW(graph6_decode("C~~"), InputError);
  EXPECT_THROW(graph6_decode("C\x01"), InputError);
  EXPECT_THROW(graph6_decode("A@"), InputError);  // padding bit set
  EXPECT_THROW(parse_adjacency_text("2\n01\n00\n"), InputError);
  EXPECT_THROW(parse_adjacency_text("2\n11\n10\n"), InputError);
  EXPECT_THROW(parse_adjacency_text("2\n01\n"), InputError);
}

TEST(Graph6, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "srgforge_test_graphs.g6").string();
  const std::vector<Graph> graphs{petersen_graph(), triangular_graph(6), Graph(1)};
  write_graph6_file(path, graphs);
  EXPECT_EQ(read_graph6_file(path), graphs);
  std::filesystem::remove(path);
  EXPECT_THROW(read_graph6_file(path), InputError);
}

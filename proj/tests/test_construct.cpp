#include <gtest/gtest.h>

#include "oracles.hpp"
#include "srgforge/construct.hpp"
#include "srgforge/fixtures.hpp"

using namespace srgforge;

namespace {

PermutationGroup sym(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
  return PermutationGroup(n, {Permutation::from_cycles("(1,2)", n), Permutation::from_cycles(cycle, n)});
}

TransitiveAction pairs_action(std::size_t n) {
  const auto g = sym(n);
  std::vector<Permutation> gens{Permutation::from_cycles("(1,2)", n)};
  if (n >= 4) gens.push_back(Permutation::from_cycles("(3,4)", n));
  if (n >= 5) {
    std::string cycle = "(";
    for (std::size_t i = 3; i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
    gens.push_back(Permutation::from_cycles(cycle, n));
  }
  return coset_action(g, PermutationGroup(n, gens));
}

}  // namespace

TEST(Construct, TriangularAndKneserGraphs) {
  const auto act = pairs_action(6);  // 15 pairs, suborbits 1, 8, 6
  ASSERT_EQ(act.rank(), 3U);
  const auto sels = enumerate_selections(act);
  ASSERT_EQ(sels.size(), 3U);
  const Graph t6 = build_graph(make_selection(act, {1}));
  EXPECT_EQ(is_strongly_regular(t6), (SrgParams{15, 6, 1, 3}));
  EXPECT_EQ(oracle::srg(t6), is_strongly_regular(t6));
  const Graph t6b = build_graph(make_selection(act, {2}));
  EXPECT_EQ(is_strongly_regular(t6b), (SrgParams{15, 8, 4, 4}));
  EXPECT_EQ(complement(t6), t6b);
}

TEST(Construct, GeneratorsActAsAutomorphisms) {
  const auto act = pairs_action(5);
  for (const auto& sel : enumerate_selections(act)) {
    if (sel.union_size + 1 == act.degree()) continue;
    const Graph g = build_graph(sel);
    for (const auto& gen : act.generator_images()) EXPECT_TRUE(g.is_automorphism(gen));
    EXPECT_EQ(g.degree(0), sel.union_size);
  }
}

TEST(Construct, SelectionValidation) {
  const auto g = PermutationGroup(7, {Permutation::from_cycles("(1,2,3,4,5,6,7)", 7)});
  const auto act = coset_action(g, PermutationGroup::trivial(7));
  EXPECT_EQ(pairing_classes(act).size(), 3U);
  EXPECT_EQ(enumerate_selections(act).size(), 7U);  // 2^3 - 1
  const std::size_t i = 1, j = act.suborbits()[1].paired_with;
  EXPECT_FALSE(make_selection(act, {i}).pairing_closed());
  EXPECT_THROW(build_graph(make_selection(act, {i})), InputError);
  EXPECT_TRUE(make_selection(act, {j, i}).pairing_closed());
  EXPECT_THROW(build_graph(make_selection(act, {0, i, j})), InputError);
  EXPECT_THROW(make_selection(act, {9}), InputError);
  const Graph c7 = build_graph(make_selection(act, {i, j}));
  EXPECT_EQ(c7.edge_count(), 7U);
}

TEST(Construct, OrbitalAlgebraAgreesWithGraphs) {
  // Every selection of every small fixture action: the algebra decides
  // strong regularity exactly as the built graph does.
  for (const char* name : {"a8", "u42"}) {
    const auto set = load_fixtures(std::string(SRGFORGE_FIXTURE_DIR) + "/" + name + "/manifest.json", false);
    for (const auto& s : set.subgroups) {
      const auto act = coset_action(set.group, s.group);
      if (act.degree() > 150) continue;
      const OrbitalAlgebra alg(act);
      for (const auto& sel : enumerate_selections(act)) {
        const auto predicted = alg.srg_parameters(sel.indices);
        if (sel.union_size + 1 == act.degree()) {
          EXPECT_FALSE(predicted);
          continue;
        }
        const Graph g = build_graph(sel);
        EXPECT_EQ(predicted, is_strongly_regular(g)) << s.name;
        // (A^2)_{alpha, x} for x in suborbit l
        for (std::size_t l = 0; l < act.rank(); ++l) {
          const Point x = act.suborbits()[l].least();
          EXPECT_EQ(alg.square_entry(sel.indices, l), static_cast<std::int64_t>(g.common_neighbours(0, x)));
        }
      }
    }
  }
}

TEST(Construct, IntersectionNumbersCount) {
  const auto act = pairs_action(5);
  const OrbitalAlgebra alg(act);
  // sum_j p_{ij}^l = |suborbit i|
  for (std::size_t i = 0; i < act.rank(); ++i) {
    for (std::size_t l = 0; l < act.rank(); ++l) {
      std::int64_t total = 0;
      for (std::size_t j = 0; j < act.rank(); ++j) total += alg.value(i, j, l);
      EXPECT_EQ(total, static_cast<std::int64_t>(act.suborbits()[i].size()));
    }
  }
}

TEST(Design, PointsAndPairsOfS5) {
  // Omega1 = points, Omega2 = 2-subsets; alpha = point 1; Delta = pairs containing 1.
  const auto g = sym(5);
  const auto points = coset_action(g, g.stabilizer(0));
  const auto pairs = pairs_action(5);
  for (Point rep = 1; rep < pairs.degree(); ++rep) {
    const Point reps[] = {rep};
    const auto d = construct_design(points, pairs, reps);
    EXPECT_TRUE(d.formulas_agree());
    EXPECT_EQ(d.points, 10U);
    // Replication times points equals block size times blocks.
    EXPECT_EQ(d.replication * d.points, d.block_size * d.block_count);
    const auto inc = incidence_matrix(d);
    ASSERT_EQ(inc.size(), d.points);
    for (const auto& row : inc) {
      EXPECT_EQ(static_cast<std::size_t>(std::count(row.begin(), row.end(), true)), d.replication);
    }
  }
}

TEST(Design, DegenerateWholeSpace) {
  const auto g = sym(4);
  const auto points = coset_action(g, g.stabilizer(0));
  const auto pairs = pairs_action(4);
  // One representative per G_alpha-orbit on the pairs.
  std::vector<Permutation> gens;
  const auto stab = g.stabilizer(0);
  for (const auto& h : stab.generators()) gens.push_back(pairs.image_of(h));
  std::vector<Point> reps;
  for (const auto& orbit : PermutationGroup(pairs.degree(), gens).orbits()) reps.push_back(orbit.front());
  ASSERT_EQ(reps.size(), 2U);
  const auto d = construct_design(points, pairs, reps);
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.block_count, 1U);
  EXPECT_EQ(d.replication, 1U);
}

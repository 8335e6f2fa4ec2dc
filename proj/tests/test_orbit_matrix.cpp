#include <gtest/gtest.h>

#include "oracles.hpp"
#include "srgforge/fixtures.hpp"
#include "srgforge/orbit_matrix.hpp"

using namespace srgforge;

namespace {

// Petersen graph under the rotation (0 1 2 3 4)(5 6 7 8 9): two orbits of 5.
OrbitMatrix petersen_matrix() {
  const Graph g = petersen_graph();
  PermutationGroup h(10, {Permutation::from_cycles("(1,2,3,4,5)(6,7,8,9,10)", 10)});
  return column_orbit_matrix(g, orbit_partition(g, h));
}

const std::string kFixtures = SRGFORGE_FIXTURE_DIR;

}  // namespace

TEST(OrbitMatrix, PetersenUnderRotation) {
  const auto m = petersen_matrix();
  ASSERT_EQ(m.t(), 2U);
  EXPECT_EQ(m.lengths, (std::vector<std::int64_t>{5, 5}));
  // Column sums are k = 3 and each column is constant on its orbit.
  EXPECT_EQ(m.entries[0][0] + m.entries[1][0], 3);
  EXPECT_EQ(m.entries[0][1] + m.entries[1][1], 3);
  EXPECT_TRUE(validate_orbit_matrix(m).ok());
}

TEST(OrbitMatrix, EverySingleEntryMutationIsCaught) {
  const auto set = load_fixtures(kFixtures + "/u42/manifest.json", false);
  for (const auto& om : set.orbit_matrices) {
    const Graph g = named_graph(set, set.graph(om.graph));
    const auto m = column_orbit_matrix(g, orbit_partition(g, fixture_vertex_group(set, om)));
    ASSERT_TRUE(validate_orbit_matrix(m).ok());
    const std::size_t stride = m.t() > 12 ? 7 : 1;
    for (std::size_t i = 0; i < m.t(); i += stride) {
      for (std::size_t j = 0; j < m.t(); j += stride) {
        for (std::int64_t delta : {-2, -1, 1, 3}) {
          OrbitMatrix bad = m;
          bad.entries[i][j] += delta;
          EXPECT_FALSE(validate_orbit_matrix(bad).ok()) << om.name << " " << i << "," << j;
        }
      }
    }
  }
}

TEST(OrbitMatrix, ViolationKinds) {
  auto m = petersen_matrix();
  OrbitMatrix bad = m;
  bad.lengths = {5, 4};
  auto v = validate_orbit_matrix(bad);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations.front().check, OrbitMatrixCheck::Shape);

  bad = m;
  bad.params.lambda = 1;
  v = validate_orbit_matrix(bad);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations.front().check, OrbitMatrixCheck::Quadratic);

  bad = m;
  bad.params.k = 4;
  v = validate_orbit_matrix(bad);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations.front().check, OrbitMatrixCheck::ColumnSum);
  EXPECT_EQ(to_string(OrbitMatrixCheck::WeightedRowSum), "weighted-row-sum");
}

TEST(OrbitMatrix, RejectsBadPartitionsAndGroups) {
  const Graph g = petersen_graph();
  EXPECT_THROW(column_orbit_matrix(g, {{0, 1, 2, 3, 4}, {5, 6, 7, 8}}), InputError);
  EXPECT_THROW(column_orbit_matrix(g, {{0, 1, 2, 3, 4}, {4, 5, 6, 7, 8, 9}}), InputError);
  // A partition that is not equitable.
  EXPECT_THROW(column_orbit_matrix(g, {{0, 1}, {2, 3, 4, 5, 6, 7, 8, 9}}), InputError);
  EXPECT_THROW(column_orbit_matrix(cycle_graph(6), {{0, 1, 2, 3, 4, 5}}), InputError);
  EXPECT_THROW(orbit_partition(g, PermutationGroup(10, {Permutation::from_cycles("(1,2)", 10)})), InputError);
  EXPECT_THROW(orbit_partition(g, PermutationGroup::trivial(9)), InputError);
}

TEST(OrbitMatrix, TextRoundTrip) {
  const auto m = petersen_matrix();
  EXPECT_EQ(parse_orbit_matrix(format_orbit_matrix(m)), m);
  EXPECT_EQ(parse_orbit_matrix("# comment\n2 5 5\n10 3 0 1\n" + format_orbit_matrix(m).substr(format_orbit_matrix(m).find('\n', 8) + 1)), m);
  EXPECT_THROW(parse_orbit_matrix("2 5 5\n10 3 0 1\n1 2\n"), InputError);
  EXPECT_THROW(parse_orbit_matrix("2 5 5\n10 3 0 1\n1 2\n2 1\n9\n"), InputError);
  EXPECT_THROW(parse_orbit_matrix("x"), InputError);
}

TEST(Collapse, PredictionsMatchMeasuredGraphs) {
  const auto set = load_fixtures(kFixtures + "/u42/manifest.json", false);
  for (const auto& om : set.orbit_matrices) {
    const Graph g = named_graph(set, set.graph(om.graph));
    const auto m = column_orbit_matrix(g, orbit_partition(g, fixture_vertex_group(set, om)));
    const auto results = collapse(m);
    ASSERT_EQ(results.size(), 2U);
    EXPECT_LT(results[0].spec.x, results[1].spec.x);
    for (const auto& r : results) {
      EXPECT_EQ(r.prediction.params(), r.params);
      EXPECT_EQ(oracle::srg(r.graph), std::optional<SrgParams>(r.params));
      EXPECT_EQ(r.graph.order(), m.t());
    }
    // The two assignments give complementary graphs.
    EXPECT_EQ(complement(results[0].graph), results[1].graph);
    ASSERT_EQ(om.collapses.size(), 2U);
    EXPECT_EQ(results[0].params, om.collapses[0].second);
    EXPECT_EQ(results[1].params, om.collapses[1].second);
    const auto gen = generalized_collapse(m);
    ASSERT_EQ(gen.size(), 2U);
    EXPECT_EQ(gen[0].graph, results[0].graph);
  }
}

TEST(Collapse, Preconditions) {
  auto m = petersen_matrix();  // orbits of equal length
  OrbitMatrix unequal = m;
  unequal.lengths = {4, 6};
  EXPECT_THROW(collapse(unequal), CollapseError);
  // Petersen under the full rotation has t = 2: one off-diagonal value.
  EXPECT_THROW(collapse(m), CollapseError);
  OrbitMatrix single;
  single.lengths = {10};
  single.entries = {{3}};
  single.params = {10, 3, 0, 1};
  EXPECT_THROW(collapse(single), CollapseError);
}

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srgforge/action.hpp"
#include "srgforge/graph.hpp"

namespace srgforge {

/// Raised when a manifest expectation disagrees with the computed value. The
/// message names the manifest row.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group file: `degree N`, then one generator per line in 1-based cycle
/// notation. Blank lines and `#` comments are ignored.
PermutationGroup parse_group_text(std::string_view text);
PermutationGroup read_group_file(const std::string& path);
std::string format_group_text(const PermutationGroup& g, const std::string& comment = {});

struct SubgroupFixture {
  std::string name;
  std::string structure;
  std::string file;
  PermutationGroup group;
  std::optional<std::uint64_t> order;
  std::optional<std::size_t> index;
  std::optional<std::size_t> rank;
  std::optional<bool> primitive;
  /// Coset action, filled by validation or on first use (not thread-safe).
  mutable std::shared_ptr<const TransitiveAction> action;
};

/// A pipeline graph picked out by subgroup and suborbit selection.
struct NamedGraph {
  std::string name;
  std::string subgroup;
  std::vector<std::size_t> selection;
  std::optional<SrgParams> params;
  std::optional<std::uint64_t> aut_order;
  bool aut_small = false;  // automorphism order is cheap enough for the default run
  std::optional<std::uint64_t> cliques12;
};

/// An automorphism subgroup of a named graph, given by ambient-group elements
/// that act on the graph through its coset action.
struct OrbitMatrixFixture {
  std::string name;
  std::string graph;
  std::string file;
  PermutationGroup group;  // ambient degree
  std::optional<std::size_t> orbits;
  std::optional<std::int64_t> orbit_length;
  /// Expected collapse results as (x, params) pairs.
  std::vector<std::pair<std::int64_t, SrgParams>> collapses;
  /// Graph the x = min collapse must be isomorphic to: `NAME` in this
  /// manifest or `PATH:NAME` for another manifest (path relative to this one).
  std::optional<std::string> isomorphic_to;
};

struct FixtureSet {
  std::string name;
  std::string directory;  // of the manifest
  std::string group_file;
  PermutationGroup group;
  std::optional<std::uint64_t> order;
  std::size_t max_degree = 600;
  std::vector<SubgroupFixture> subgroups;
  std::vector<SrgParams> expected_srgs;  // multiset, sorted
  std::vector<NamedGraph> graphs;
  std::vector<OrbitMatrixFixture> orbit_matrices;

  const SubgroupFixture& subgroup(const std::string& name) const;
  const NamedGraph& graph(const std::string& name) const;
};

/// Reads a JSON manifest; file names are relative to the manifest directory.
/// With `validate`, every stated order, index, rank and primitivity is
/// recomputed (FixtureError on mismatch) and each subgroup's action is kept.
FixtureSet load_fixtures(const std::string& manifest_path, bool validate = true);

/// Builds (and caches on the fixture) the coset action of a subgroup.
const TransitiveAction& fixture_action(const FixtureSet& set, const SubgroupFixture& sub);

/// The graph of a named selection.
Graph named_graph(const FixtureSet& set, const NamedGraph& g);

/// Maps the generators of an orbit-matrix fixture into the vertex action of
/// its graph.
PermutationGroup fixture_vertex_group(const FixtureSet& set, const OrbitMatrixFixture& om);

}  // namespace srgforge

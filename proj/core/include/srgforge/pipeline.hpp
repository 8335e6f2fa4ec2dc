#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srgforge/fixtures.hpp"
#include "srgforge/search.hpp"

namespace srgforge {

struct SearchOptions {
  std::size_t max_degree = 600;
  unsigned threads = 0;  // 0: SRGFORGE_THREADS or hardware concurrency
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct SubgroupSummary {
  std::string name;
  std::string structure;
  std::uint64_t order = 0;
  std::size_t index = 0;
  std::size_t rank = 0;
  bool primitive = false;
  bool skipped = false;             // index above max_degree
  std::uint64_t selections = 0;     // pairing-closed selections examined
  std::uint64_t srg_selections = 0; // strongly regular, before complement filtering and deduplication
};

struct SrgRow {
  std::string subgroup;
  std::size_t subgroup_position = 0;  // in the input list
  std::size_t index = 0;
  std::size_t rank = 0;
  bool primitive = false;
  std::vector<std::size_t> selection;
  SrgParams params;
  SrgParams complement;
  std::uint64_t fingerprint = 0;
  Graph graph;
  /// Other (subgroup, selection) pairs that produced an isomorphic graph.
  std::vector<std::string> also_from;
  std::string file;

  // Filled on request by the front end.
  std::optional<std::uint64_t> aut_order;
  std::optional<bool> aut_complete;
  std::optional<std::uint64_t> cliques;
  std::size_t clique_size = 0;
};

struct SearchReport {
  std::string group;
  std::uint64_t group_order = 0;
  std::size_t max_degree = 0;
  std::vector<SubgroupSummary> subgroups;
  std::vector<SrgRow> rows;
  std::vector<std::string> notes;

  std::vector<SrgParams> parameter_multiset() const;
};

/// Runs the construction over every subgroup: coset action, all
/// pairing-closed suborbit unions, strong regularity decided in the orbital
/// algebra, graphs built and checked, then deduplicated up to isomorphism
/// across the whole run. Only the member of each complementary pair with
/// k <= (v - 1) / 2 is listed. Rows are sorted by (v, parameters, fingerprint)
/// and then by input position, so the report does not depend on scheduling.
SearchReport srg_search(const std::string& group_name, const PermutationGroup& group,
                        const std::vector<SubgroupFixture>& subgroups, const SearchOptions& options = {});

enum class GraphFormat { Graph6, Adjacency };

/// Writes one file per row into `directory` and records the file names. Each
/// file is read back and must decode to a graph with the row's parameters.
void write_graph_files(SearchReport& report, const std::string& directory, GraphFormat format);

/// Runs the search over every subgroup of a loaded manifest.
SearchReport srg_search(const FixtureSet& set, const SearchOptions& options = {});

struct ExpectationOptions {
  bool aut_large = false;  // also check automorphism orders not marked aut_small
  bool cliques = false;    // check 12-clique counts
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct Expectation {
  std::string what;
  bool ok = false;
  std::string detail;
};

/// Compares a report against the manifest: the parameter multiset (restricted
/// to subgroups within the degree bound) and every named graph whose subgroup
/// was searched. Fills aut_order and clique counts on the matching rows.
std::vector<Expectation> check_expectations(const FixtureSet& set, SearchReport& report,
                                            const ExpectationOptions& options = {});

/// Deterministic JSON rendering of the report.
std::string report_json(const SearchReport& report);

}  // namespace srgforge

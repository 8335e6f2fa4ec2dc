// srgforge: command-line front end.
//
//   srgforge srg-search --manifest fixtures/u42/manifest.json --out report.json --graphs out/
//   srgforge srg-search --group g.grp --subgroups h1.grp h2.grp --max-degree 600
//   srgforge iso a.g6 b.g6
//   srgforge aut graphs.g6
//   srgforge cliques graphs.g6 --size 12
//   srgforge check-srg graphs.g6
//   srgforge om-build --manifest fixtures/u42/manifest.json --fixture E8_G2_4
//   srgforge om-build --graph g.g6 --generators aut.grp
//   srgforge om-validate m.om
//   srgforge om-collapse m.om [--generalized] [--graphs out/]
//   srgforge find-subgroup --group g.grp --order 48 --rank 25 --seed 5
//
// Exit status: 0 on success, 1 when a check or expectation fails, 2 on bad
// input or an internal error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srgforge/cliques.hpp"
#include "srgforge/construct.hpp"
#include "srgforge/fixtures.hpp"
#include "srgforge/graph6.hpp"
#include "srgforge/orbit_matrix.hpp"
#include "srgforge/parallel.hpp"
#include "srgforge/pipeline.hpp"
#include "srgforge/search.hpp"

using namespace srgforge;

namespace {

constexpr int kFailed = 1;
constexpr int kError = 2;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

/// graph6 (one per line) unless the extension is .adj.
std::vector<Graph> load_graphs(const std::string& path) {
  if (std::filesystem::path(path).extension() == ".adj") return {parse_adjacency_text(read_text(path))};
  auto graphs = read_graph6_file(path);
  if (graphs.empty()) throw InputError(path + ": no graphs");
  return graphs;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct SearchArgs {
  std::string manifest;
  std::string group;
  std::vector<std::string> subgroups;
  std::size_t max_degree = 0;
  std::string out;
  std::string graphs;
  std::string format = "graph6";
  bool aut_large = false;
  bool cliques = false;
  unsigned threads = 0;
};

int run_search(const SearchArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  SearchOptions options;
  options.threads = a.threads;
  SearchReport report;
  std::optional<FixtureSet> set;
  if (!a.manifest.empty()) {
    set = load_fixtures(a.manifest);
    options.max_degree = a.max_degree ? a.max_degree : set->max_degree;
    report = srg_search(*set, options);
  } else {
    if (a.group.empty() || a.subgroups.empty()) throw InputError("srg-search needs --manifest or --group with --subgroups");
    const PermutationGroup group = read_group_file(a.group);
    std::vector<SubgroupFixture> subs;
    for (const auto& path : a.subgroups) {
      SubgroupFixture s;
      s.name = std::filesystem::path(path).stem().string();
      s.file = path;
      s.group = read_group_file(path);
      if (s.group.degree() != group.degree()) throw InputError(path + ": degree differs from the group");
      for (const auto& g : s.group.generators()) {
        if (!group.contains(g)) throw InputError(path + ": generator " + g.to_cycles() + " is not in the group");
      }
      subs.push_back(std::move(s));
    }
    if (a.max_degree) options.max_degree = a.max_degree;
    report = srg_search(std::filesystem::path(a.group).stem().string(), group, subs, options);
  }

  bool ok = true;
  if (set) {
    ExpectationOptions eo;
    eo.aut_large = a.aut_large;
    eo.cliques = a.cliques;
    for (const auto& e : check_expectations(*set, report, eo)) {
      std::cerr << (e.ok ? "ok    " : "FAIL  ") << e.what << ": " << e.detail << "\n";
      ok = ok && e.ok;
    }
  } else if (a.aut_large || a.cliques) {
    for (auto& row : report.rows) {
      if (a.aut_large) {
        const auto aut = automorphism_group(row.graph);
        row.aut_order = aut.order();
        row.aut_complete = aut.complete;
      }
      if (a.cliques) {
        row.clique_size = 12;
        row.cliques = count_cliques(row.graph, 12);
      }
    }
  }
  if (!a.graphs.empty()) {
    if (a.format != "graph6" && a.format != "adjacency") throw InputError("--format must be graph6 or adjacency");
    write_graph_files(report, a.graphs, a.format == "graph6" ? GraphFormat::Graph6 : GraphFormat::Adjacency);
  }
  const std::string json = report_json(report);
  if (a.out.empty()) {
    std::cout << json;
  } else {
    write_text(a.out, json);
  }
  std::cerr << report.group << ": " << report.rows.size() << " strongly regular graphs in " << seconds_since(start)
            << " s\n";
  return ok ? 0 : kFailed;
}

int run_iso(const std::string& a, const std::string& b, std::uint64_t budget) {
  const Graph ga = load_graphs(a).at(0);
  const Graph gb = load_graphs(b).at(0);
  const auto r = find_isomorphism(ga, gb, budget);
  if (!r.isomorphic) {
    std::cout << "not isomorphic\n";
    return kFailed;
  }
  std::cout << "isomorphic\n";
  if (r.mapping) std::cout << r.mapping->to_cycles() << "\n";
  return 0;
}

int run_aut(const std::string& path, std::uint64_t budget) {
  int status = 0;
  for (const auto& g : load_graphs(path)) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = automorphism_group(g, budget);
    std::cout << "v=" << g.order() << " |Aut|=" << r.order() << (r.complete ? "" : " (incomplete, lower bound)")
              << " generators=" << r.group.generators().size() << " nodes=" << r.nodes << " " << seconds_since(start)
              << "s\n";
    if (!r.complete) status = kFailed;
  }
  return status;
}

int run_cliques(const std::string& path, std::size_t size) {
  for (const auto& g : load_graphs(path)) {
    const auto start = std::chrono::steady_clock::now();
    const auto count = count_cliques(g, size);
    std::cout << "v=" << g.order() << " K" << size << "=" << count << " " << seconds_since(start) << "s\n";
  }
  return 0;
}

int run_check_srg(const std::vector<std::string>& paths) {
  int status = 0;
  for (const auto& path : paths) {
    const auto graphs = load_graphs(path);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto p = is_strongly_regular(graphs[i]);
      std::cout << path << ":" << i + 1 << ": ";
      if (p) {
        std::cout << p->to_string() << "\n";
      } else {
        std::cout << "not strongly regular\n";
        status = kFailed;
      }
    }
  }
  return status;
}

int run_om_build(const std::string& manifest, const std::string& fixture, const std::string& graph_path,
                 const std::string& generators, const std::string& out) {
  Graph g;
  PermutationGroup h;
  if (!manifest.empty()) {
    if (fixture.empty()) throw InputError("om-build with --manifest needs --fixture");
    const auto set = load_fixtures(manifest);
    const OrbitMatrixFixture* om = nullptr;
    for (const auto& m : set.orbit_matrices) {
      if (m.name == fixture) om = &m;
    }
    if (!om) throw InputError(manifest + ": no orbit matrix fixture " + fixture);
    g = named_graph(set, set.graph(om->graph));
    h = fixture_vertex_group(set, *om);
  } else {
    if (graph_path.empty() || generators.empty()) throw InputError("om-build needs --manifest or --graph with --generators");
    g = load_graphs(graph_path).at(0);
    h = read_group_file(generators);
  }
  const OrbitMatrix m = column_orbit_matrix(g, orbit_partition(g, h));
  if (out.empty()) {
    std::cout << format_orbit_matrix(m);
  } else {
    write_text(out, format_orbit_matrix(m));
  }
  return 0;
}

int run_om_validate(const std::string& path) {
  const OrbitMatrix m = parse_orbit_matrix(read_text(path));
  const auto verdict = validate_orbit_matrix(m);
  for (const auto& v : verdict.violations) {
    std::cout << to_string(v.check);
    if (v.check != OrbitMatrixCheck::ColumnSum) std::cout << " i=" << v.i + 1;
    if (v.check != OrbitMatrixCheck::WeightedRowSum) std::cout << " j=" << v.j + 1;
    std::cout << ": " << v.lhs << " != " << v.rhs << "\n";
  }
  std::cout << (verdict.ok() ? "valid" : "invalid") << " orbit matrix for " << m.params.to_string() << ", t=" << m.t()
            << "\n";
  return verdict.ok() ? 0 : kFailed;
}

int run_om_collapse(const std::string& path, bool generalized, const std::string& graphs) {
  const OrbitMatrix m = parse_orbit_matrix(read_text(path));
  std::vector<Graph> produced;
  if (generalized) {
    for (const auto& c : generalized_collapse(m)) {
      std::cout << "w=" << c.value << ": " << c.params.to_string() << "\n";
      produced.push_back(c.graph);
    }
  } else {
    for (const auto& c : collapse(m)) {
      std::cout << "x=" << c.spec.x << " y=" << c.spec.y << " d=" << c.spec.d << " n=" << c.spec.n << ": "
                << c.params.to_string() << "\n";
      produced.push_back(c.graph);
    }
  }
  if (!graphs.empty()) write_graph6_file(graphs, produced);
  return 0;
}

// Random 2-generated subgroups of `within` with the requested order (and rank
// of the coset action, when given). Results depend on the seed.
int run_find_subgroup(const std::string& group_path, const std::string& within_path, std::uint64_t order,
                      std::size_t rank, std::uint64_t seed, std::size_t trials, const std::string& out) {
  const PermutationGroup group = read_group_file(group_path);
  const PermutationGroup within = within_path.empty() ? group : read_group_file(within_path);
  if (group.order() % order != 0) throw InputError("order " + std::to_string(order) + " does not divide |G|");
  std::mt19937_64 rng(seed);
  std::cerr << "find-subgroup: randomized search, seed " << seed << "\n";
  for (std::size_t t = 0; t < trials; ++t) {
    PermutationGroup s(group.degree(), {within.random_element(rng), within.random_element(rng)});
    if (s.order() != order) continue;
    if (!std::all_of(s.generators().begin(), s.generators().end(), [&](const Permutation& g) { return group.contains(g); })) {
      continue;
    }
    const auto act = coset_action(group, s);
    if (rank && act.rank() != rank) continue;
    const std::string comment = "order " + std::to_string(order) + ", index " + std::to_string(act.degree()) +
                                ", rank " + std::to_string(act.rank()) + (is_primitive(act) ? ", primitive" : "") +
                                "; find-subgroup seed " + std::to_string(seed) + " trial " + std::to_string(t);
    const std::string text = format_group_text(s, comment);
    if (out.empty()) {
      std::cout << text;
    } else {
      write_text(out, text);
    }
    return 0;
  }
  std::cerr << "find-subgroup: nothing found in " << trials << " trials\n";
  return kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly regular graphs from transitive group actions, and orbit matrices"};
  app.require_subcommand(1);
  std::uint64_t budget = kDefaultNodeBudget;
  app.add_option("--node-budget", budget, "Search-tree node budget for isomorphism and automorphism searches");

  SearchArgs sa;
  auto* search = app.add_subcommand("srg-search", "Classify SRGs from all subgroups of a group");
  search->add_option("--manifest", sa.manifest, "Fixture manifest (JSON)");
  search->add_option("--group", sa.group, "Group file, used with --subgroups");
  search->add_option("--subgroups", sa.subgroups, "Subgroup files");
  search->add_option("--max-degree", sa.max_degree, "Skip subgroups of larger index");
  search->add_option("--out", sa.out, "Report JSON path (default stdout)");
  search->add_option("--graphs", sa.graphs, "Directory for graph files");
  search->add_option("--format", sa.format, "graph6 or adjacency")->check(CLI::IsMember({"graph6", "adjacency"}));
  search->add_flag("--aut-large", sa.aut_large, "Also compute automorphism groups of the large graphs (slow)");
  search->add_flag("--cliques", sa.cliques, "Count 12-cliques (slow)");
  search->add_option("--threads", sa.threads, "Worker threads (default SRGFORGE_THREADS or all cores)");

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso->add_option("first", iso_a)->required();
  iso->add_option("second", iso_b)->required();

  std::string aut_path;
  auto* aut = app.add_subcommand("aut", "Automorphism group order");
  aut->add_option("graphs", aut_path)->required();

  std::string cl_path;
  std::size_t cl_size = 0;
  auto* cliques = app.add_subcommand("cliques", "Count cliques of a given size");
  cliques->add_option("graphs", cl_path)->required();
  cliques->add_option("--size", cl_size)->required();

  std::vector<std::string> srg_paths;
  auto* check = app.add_subcommand("check-srg", "Report SRG parameters");
  check->add_option("graphs", srg_paths)->required();

  std::string om_manifest, om_fixture, om_graph, om_gens, om_out;
  auto* om_build = app.add_subcommand("om-build", "Column orbit matrix of an SRG under an automorphism group");
  om_build->add_option("--manifest", om_manifest);
  om_build->add_option("--fixture", om_fixture, "Orbit matrix fixture name");
  om_build->add_option("--graph", om_graph);
  om_build->add_option("--generators", om_gens, "Group file acting on the vertices (1-based)");
  om_build->add_option("--out", om_out);

  std::string om_path;
  auto* om_validate = app.add_subcommand("om-validate", "Check the orbit matrix equations");
  om_validate->add_option("matrix", om_path)->required();

  bool generalized = false;
  std::string collapse_graphs;
  auto* om_collapse = app.add_subcommand("om-collapse", "Collapse an orbit matrix to a smaller graph");
  om_collapse->add_option("matrix", om_path)->required();
  om_collapse->add_flag("--generalized", generalized, "Map each off-diagonal value to 1 in turn");
  om_collapse->add_option("--graphs", collapse_graphs, "Write the collapsed graphs (graph6)");

  std::string fs_group, fs_within, fs_out;
  std::uint64_t fs_order = 0, fs_seed = 1;
  std::size_t fs_rank = 0, fs_trials = 10000;
  auto* find = app.add_subcommand("find-subgroup", "Randomized subgroup search (nondeterministic across seeds)");
  find->add_option("--group", fs_group)->required();
  find->add_option("--within", fs_within, "Draw generators from this subgroup");
  find->add_option("--order", fs_order)->required();
  find->add_option("--rank", fs_rank, "Required rank of the coset action");
  find->add_option("--seed", fs_seed);
  find->add_option("--trials", fs_trials);
  find->add_option("--out", fs_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*search) return run_search(sa);
    if (*iso) return run_iso(iso_a, iso_b, budget);
    if (*aut) return run_aut(aut_path, budget);
    if (*cliques) return run_cliques(cl_path, cl_size);
    if (*check) return run_check_srg(srg_paths);
    if (*om_build) return run_om_build(om_manifest, om_fixture, om_graph, om_gens, om_out);
    if (*om_validate) return run_om_validate(om_path);
    if (*om_collapse) return run_om_collapse(om_path, generalized, collapse_graphs);
    if (*find) return run_find_subgroup(fs_group, fs_within, fs_order, fs_rank, fs_seed, fs_trials, fs_out);
  } catch (const FixtureError& e) {
    std::cerr << "srgforge: fixture rejected: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "srgforge: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

#include "srgforge/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "srgforge/construct.hpp"

namespace srgforge {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

SrgParams params_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) throw InputError(where + ": params must be [v,k,lambda,mu]");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(), j[3].get<std::int64_t>()};
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

std::string resolve(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).lexically_normal().string();
}

}  // namespace

PermutationGroup parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<std::size_t> degree;
  std::vector<Permutation> generators;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      if (!degree) {
        std::istringstream head(line);
        std::string word;
        long long n = 0;
        if (!(head >> word >> n) || word != "degree" || n <= 0) throw InputError("expected 'degree N'");
        std::string extra;
        if (head >> extra) throw InputError("trailing text after degree");
        degree = static_cast<std::size_t>(n);
        continue;
      }
      generators.push_back(Permutation::from_cycles(line, *degree));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree) throw InputError("group file has no 'degree N' line");
  if (generators.empty()) throw InputError("group file has no generators");
  return PermutationGroup(*degree, std::move(generators));
}

PermutationGroup read_group_file(const std::string& path) {
  try {
    return parse_group_text(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_group_text(const PermutationGroup& g, const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  out += "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators()) out += p.to_cycles() + "\n";
  return out;
}

const SubgroupFixture& FixtureSet::subgroup(const std::string& key) const {
  for (const auto& s : subgroups) {
    if (s.name == key) return s;
  }
  throw InputError("no subgroup named " + key);
}

const NamedGraph& FixtureSet::graph(const std::string& key) const {
  for (const auto& g : graphs) {
    if (g.name == key) return g;
  }
  throw InputError("no graph named " + key);
}

const TransitiveAction& fixture_action(const FixtureSet& set, const SubgroupFixture& sub) {
  if (!sub.action) sub.action = std::make_shared<const TransitiveAction>(coset_action(set.group, sub.group));
  return *sub.action;
}

Graph named_graph(const FixtureSet& set, const NamedGraph& g) {
  const auto& act = fixture_action(set, set.subgroup(g.subgroup));
  return build_graph(make_selection(act, g.selection));
}

PermutationGroup fixture_vertex_group(const FixtureSet& set, const OrbitMatrixFixture& om) {
  const auto& act = fixture_action(set, set.subgroup(set.graph(om.graph).subgroup));
  std::vector<Permutation> images;
  for (const auto& g : om.group.generators()) images.push_back(act.image_of(g));
  return PermutationGroup(act.degree(), std::move(images));
}

FixtureSet load_fixtures(const std::string& manifest_path, bool validate) {
  json doc;
  try {
    doc = json::parse(read_file(manifest_path));
  } catch (const json::parse_error& e) {
    throw InputError(manifest_path + ": " + e.what());
  }
  const std::string dir = std::filesystem::path(manifest_path).parent_path().string();
  FixtureSet set;
  set.directory = dir;
  try {
    set.name = doc.at("name").get<std::string>();
    const json& group = doc.at("group");
    set.group_file = resolve(dir, group.at("file").get<std::string>());
    set.order = optional_field<std::uint64_t>(group, "order");
    set.max_degree = doc.value("max_degree", std::size_t{600});

    for (const json& row : doc.value("subgroups", json::array())) {
      SubgroupFixture s;
      s.name = row.at("name").get<std::string>();
      s.structure = row.value("structure", std::string{});
      s.file = resolve(dir, row.at("file").get<std::string>());
      s.order = optional_field<std::uint64_t>(row, "order");
      s.index = optional_field<std::size_t>(row, "index");
      s.rank = optional_field<std::size_t>(row, "rank");
      s.primitive = optional_field<bool>(row, "primitive");
      set.subgroups.push_back(std::move(s));
    }
    for (const json& p : doc.value("expected_srgs", json::array())) {
      set.expected_srgs.push_back(params_from(p, "expected_srgs"));
    }
    std::sort(set.expected_srgs.begin(), set.expected_srgs.end());
    for (const json& row : doc.value("graphs", json::array())) {
      NamedGraph g;
      g.name = row.at("name").get<std::string>();
      g.subgroup = row.at("subgroup").get<std::string>();
      g.selection = row.at("selection").get<std::vector<std::size_t>>();
      if (row.contains("params")) g.params = params_from(row["params"], "graph " + g.name);
      g.aut_order = optional_field<std::uint64_t>(row, "aut_order");
      g.aut_small = row.value("aut_small", false);
      g.cliques12 = optional_field<std::uint64_t>(row, "cliques12");
      set.graphs.push_back(std::move(g));
    }
    for (const json& row : doc.value("orbit_matrices", json::array())) {
      OrbitMatrixFixture om;
      om.name = row.at("name").get<std::string>();
      om.graph = row.at("graph").get<std::string>();
      om.file = resolve(dir, row.at("file").get<std::string>());
      om.orbits = optional_field<std::size_t>(row, "orbits");
      om.orbit_length = optional_field<std::int64_t>(row, "orbit_length");
      for (const json& c : row.value("collapse", json::array())) {
        om.collapses.emplace_back(c.at("x").get<std::int64_t>(), params_from(c.at("params"), "orbit matrix " + om.name));
      }
      om.isomorphic_to = optional_field<std::string>(row, "isomorphic_to");
      set.orbit_matrices.push_back(std::move(om));
    }
  } catch (const json::exception& e) {
    throw InputError(manifest_path + ": " + e.what());
  }

  set.group = read_group_file(set.group_file);
  for (auto& s : set.subgroups) s.group = read_group_file(s.file);
  for (auto& om : set.orbit_matrices) om.group = read_group_file(om.file);
  for (const auto& g : set.graphs) set.subgroup(g.subgroup);
  for (const auto& om : set.orbit_matrices) set.graph(om.graph);
  if (!validate) return set;

  auto mismatch = [&](const std::string& row, const std::string& what, const std::string& expected,
                      const std::string& computed) {
    throw FixtureError(manifest_path + ": " + row + ": expected " + what + " " + expected + ", computed " + computed);
  };
  if (set.order && set.group.order() != *set.order) {
    mismatch("group", "order", std::to_string(*set.order), std::to_string(set.group.order()));
  }
  for (auto& s : set.subgroups) {
    if (s.group.degree() != set.group.degree()) {
      mismatch(s.name, "degree", std::to_string(set.group.degree()), std::to_string(s.group.degree()));
    }
    for (std::size_t i = 0; i < s.group.generators().size(); ++i) {
      if (!set.group.contains(s.group.generators()[i])) {
        throw FixtureError(manifest_path + ": " + s.name + ": generator " + std::to_string(i + 1) +
                           " is not in the group");
      }
    }
    if (s.order && s.group.order() != *s.order) {
      mismatch(s.name, "order", std::to_string(*s.order), std::to_string(s.group.order()));
    }
    const auto& act = fixture_action(set, s);
    if (s.index && act.degree() != *s.index) {
      mismatch(s.name, "index", std::to_string(*s.index), std::to_string(act.degree()));
    }
    if (s.rank && act.rank() != *s.rank) {
      mismatch(s.name, "rank", std::to_string(*s.rank), std::to_string(act.rank()));
    }
    if (s.primitive) {
      const bool prim = is_primitive(act);
      if (prim != *s.primitive) mismatch(s.name, "primitive", *s.primitive ? "yes" : "no", prim ? "yes" : "no");
    }
  }
  for (const auto& om : set.orbit_matrices) {
    if (om.group.degree() != set.group.degree()) {
      mismatch(om.name, "degree", std::to_string(set.group.degree()), std::to_string(om.group.degree()));
    }
    for (const auto& g : om.group.generators()) {
      if (!set.group.contains(g)) throw FixtureError(manifest_path + ": " + om.name + ": generator not in the group");
    }
  }
  return set;
}

}  // namespace srgforge

#include "srgforge/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "srgforge/cliques.hpp"
#include "srgforge/construct.hpp"
#include "srgforge/graph6.hpp"
#include "srgforge/parallel.hpp"

namespace srgforge {

namespace {

struct Candidate {
  std::size_t subgroup = 0;
  std::uint64_t mask = 0;
  std::vector<std::size_t> selection;
  SrgParams params;
};

struct Built {
  Graph graph;
  std::uint64_t fingerprint = 0;
};

std::string selection_text(const std::vector<std::size_t>& sel) {
  std::string out;
  for (std::size_t i = 0; i < sel.size(); ++i) out += (i ? "." : "") + std::to_string(sel[i]);
  return out;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

/// A union whose square is constant on the union and zero elsewhere: a
/// disjoint union of cliques (mu = 0).
bool is_clique_union(const OrbitalAlgebra& alg, const std::vector<std::size_t>& sel, std::int64_t k) {
  std::vector<bool> chosen(alg.rank(), false);
  for (auto i : sel) chosen[i] = true;
  for (std::size_t l = 1; l < alg.rank(); ++l) {
    if (alg.square_entry(sel, l) != (chosen[l] ? k - 1 : 0)) return false;
  }
  return true;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <typename T>
T stage(const std::string& name, const std::function<T()>& body) {
  try {
    return body();
  } catch (const BoundExceeded& e) {
    throw BoundExceeded(name + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(name + ": " + e.what());
  } catch (const std::logic_error& e) {
    throw std::logic_error(name + ": " + e.what());
  }
}

}  // namespace

std::vector<SrgParams> SearchReport::parameter_multiset() const {
  std::vector<SrgParams> out;
  for (const auto& r : rows) out.push_back(r.params);
  std::sort(out.begin(), out.end());
  return out;
}

SearchReport srg_search(const std::string& group_name, const PermutationGroup& group,
                        const std::vector<SubgroupFixture>& subgroups, const SearchOptions& options) {
  const unsigned workers = worker_count(options.threads);
  SearchReport report;
  report.group = group_name;
  report.group_order = group.order();
  report.max_degree = options.max_degree;

  std::vector<std::shared_ptr<const TransitiveAction>> actions(subgroups.size());
  std::vector<Candidate> candidates;

  for (std::size_t s = 0; s < subgroups.size(); ++s) {
    const auto& sub = subgroups[s];
    const std::string tag = "subgroup " + sub.name;
    SubgroupSummary summary;
    summary.name = sub.name;
    summary.structure = sub.structure;
    summary.order = sub.group.order();
    summary.index = static_cast<std::size_t>(report.group_order / summary.order);
    if (summary.index > options.max_degree) {
      summary.skipped = true;
      report.subgroups.push_back(summary);
      continue;
    }
    actions[s] = sub.action ? sub.action : stage<std::shared_ptr<const TransitiveAction>>(tag, [&] {
      return std::make_shared<const TransitiveAction>(
          coset_action(group, sub.group, std::max(options.max_degree, kDefaultIndexBound)));
    });
    const TransitiveAction& act = *actions[s];
    summary.index = act.degree();
    summary.rank = act.rank();
    summary.primitive = is_primitive(act);

    const OrbitalAlgebra alg(act);
    const auto classes = pairing_classes(act);
    if (classes.size() >= 40) throw BoundExceeded(tag + ": too many pairing classes to enumerate");
    const std::uint64_t total = (std::uint64_t{1} << classes.size()) - 1;
    summary.selections = total;
    const auto v = static_cast<std::int64_t>(act.degree());
    std::vector<bool> feasible_k(static_cast<std::size_t>(v), false);
    for (std::int64_t k = 1; k < v - 1; ++k) feasible_k[static_cast<std::size_t>(k)] = !feasible_parameters(v, k).empty();

    constexpr std::uint64_t kChunk = 1 << 12;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::mutex merge;
    std::vector<Candidate> found;
    std::vector<std::string> notes;
    parallel_for(chunks, workers, [&](std::size_t chunk) {
      std::vector<Candidate> local;
      std::vector<std::string> local_notes;
      const std::uint64_t begin = 1 + chunk * kChunk;
      const std::uint64_t end = std::min(total + 1, begin + kChunk);
      std::vector<std::size_t> sel;
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        sel.clear();
        std::int64_t k = 0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
          if ((mask >> c) & 1U) {
            for (auto i : classes[c]) {
              sel.push_back(i);
              k += static_cast<std::int64_t>(act.suborbits()[i].size());
            }
          }
        }
        std::sort(sel.begin(), sel.end());
        if (k < v - 1 && (v % (k + 1)) == 0 && is_clique_union(alg, sel, k)) {
          local_notes.push_back(sub.name + " selection " + selection_text(sel) + ": disjoint union of " +
                                std::to_string(v / (k + 1)) + " cliques K" + std::to_string(k + 1) +
                                " (mu = 0), not listed");
          continue;
        }
        if (k >= v - 1 || !feasible_k[static_cast<std::size_t>(k)]) continue;
        if (auto p = alg.srg_parameters(sel)) local.push_back({s, mask, sel, *p});
      }
      std::lock_guard<std::mutex> lock(merge);
      found.insert(found.end(), local.begin(), local.end());
      notes.insert(notes.end(), local_notes.begin(), local_notes.end());
    });
    std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) { return a.mask < b.mask; });
    std::sort(notes.begin(), notes.end());
    summary.srg_selections = found.size();
    for (auto& c : found) {
      if (2 * c.params.k <= c.params.v - 1) candidates.push_back(std::move(c));
    }
    report.notes.insert(report.notes.end(), notes.begin(), notes.end());
    report.subgroups.push_back(summary);
  }

  // Build and certify each candidate graph.
  std::vector<Built> built(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t i) {
    const Candidate& c = candidates[i];
    const TransitiveAction& act = *actions[c.subgroup];
    const std::string tag = "subgroup " + subgroups[c.subgroup].name + " selection " + selection_text(c.selection);
    Graph g = stage<Graph>(tag, [&] { return build_graph(make_selection(act, c.selection)); });
    auto measured = is_strongly_regular(g);
    if (!measured || *measured != c.params) {
      throw std::logic_error(tag + ": graph parameters disagree with the orbital algebra");
    }
    for (const auto& gen : act.generator_images()) {
      if (!g.is_automorphism(gen)) throw std::logic_error(tag + ": generator image is not an automorphism");
    }
    built[i].fingerprint = invariant_fingerprint(g);
    built[i].graph = std::move(g);
  });

  // Deduplicate in input order; equal fingerprints are settled by search.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    const std::string origin = subgroups[c.subgroup].name + " [" + selection_text(c.selection) + "]";
    bool duplicate = false;
    for (auto& row : report.rows) {
      if (row.params != c.params || row.fingerprint != built[i].fingerprint) continue;
      const bool iso = stage<bool>("deduplication of " + origin, [&] {
        return find_isomorphism(row.graph, built[i].graph, options.node_budget).isomorphic;
      });
      if (iso) {
        row.also_from.push_back(origin);
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    const TransitiveAction& act = *actions[c.subgroup];
    SrgRow row;
    row.subgroup = subgroups[c.subgroup].name;
    row.subgroup_position = c.subgroup;
    row.index = act.degree();
    row.rank = act.rank();
    row.primitive = report.subgroups[c.subgroup].primitive;
    row.selection = c.selection;
    row.params = c.params;
    row.complement = c.params.complement();
    row.fingerprint = built[i].fingerprint;
    row.graph = std::move(built[i].graph);
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const SrgRow& a, const SrgRow& b) {
    if (a.params != b.params) return a.params < b.params;
    if (a.fingerprint != b.fingerprint) return a.fingerprint < b.fingerprint;
    if (a.subgroup_position != b.subgroup_position) return a.subgroup_position < b.subgroup_position;
    return a.selection < b.selection;
  });
  return report;
}

void write_graph_files(SearchReport& report, const std::string& directory, GraphFormat format) {
  std::filesystem::create_directories(directory);
  for (auto& row : report.rows) {
    const std::string name = report.group + "-" + row.subgroup + "-" + selection_text(row.selection) +
                             (format == GraphFormat::Graph6 ? ".g6" : ".adj");
    const std::string path = (std::filesystem::path(directory) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    if (format == GraphFormat::Graph6) {
      out << graph6_encode(row.graph) << '\n';
    } else {
      out << adjacency_text(row.graph);
    }
    out.close();
    if (!out) throw InputError("cannot write " + path);
    const Graph back = format == GraphFormat::Graph6 ? read_graph6_file(path).at(0)
                                                     : parse_adjacency_text(read_text(path));
    if (back != row.graph || is_strongly_regular(back) != std::optional<SrgParams>(row.params)) {
      throw std::logic_error(path + ": graph does not read back with parameters " + row.params.to_string());
    }
    row.file = name;
  }
}

SearchReport srg_search(const FixtureSet& set, const SearchOptions& options) {
  return srg_search(set.name, set.group, set.subgroups, options);
}

std::vector<Expectation> check_expectations(const FixtureSet& set, SearchReport& report,
                                            const ExpectationOptions& options) {
  std::vector<Expectation> out;
  auto add = [&](std::string what, bool ok, std::string detail) {
    out.push_back({std::move(what), ok, std::move(detail)});
  };
  auto searched = [&](const std::string& name) {
    for (const auto& s : report.subgroups) {
      if (s.name == name) return !s.skipped;
    }
    return false;
  };

  // Expected rows come from subgroups within the bound: v is the index.
  std::vector<SrgParams> expected;
  for (const auto& p : set.expected_srgs) {
    if (static_cast<std::size_t>(p.v) <= report.max_degree) expected.push_back(p);
  }
  const auto got = report.parameter_multiset();
  std::string listing;
  for (const auto& p : got) listing += (listing.empty() ? "" : " ") + p.to_string();
  add("parameter multiset", got == expected,
      std::to_string(got.size()) + " rows (expected " + std::to_string(expected.size()) + "): " + listing);

  for (const auto& ng : set.graphs) {
    if (!searched(ng.subgroup)) continue;
    const Graph g = stage<Graph>("graph " + ng.name, [&] { return named_graph(set, ng); });
    const auto params = is_strongly_regular(g);
    if (ng.params) {
      add(ng.name + " parameters", params == ng.params,
          params ? params->to_string() : std::string("not strongly regular"));
    }
    if (!params) continue;
    const std::uint64_t fp = invariant_fingerprint(g);
    SrgRow* row = nullptr;
    for (auto& r : report.rows) {
      if (r.params == *params && r.fingerprint == fp && are_isomorphic(r.graph, g, options.node_budget)) {
        row = &r;
        break;
      }
    }
    add(ng.name + " listed", row != nullptr, row ? row->subgroup : std::string("no isomorphic row"));
    if (ng.aut_order && (ng.aut_small || options.aut_large)) {
      const auto aut = automorphism_group(g, options.node_budget);
      if (row) {
        row->aut_order = aut.order();
        row->aut_complete = aut.complete;
      }
      add(ng.name + " |Aut|", aut.complete && aut.order() == *ng.aut_order,
          std::to_string(aut.order()) + (aut.complete ? "" : " (search incomplete)") + ", expected " +
              std::to_string(*ng.aut_order));
    }
    if (ng.cliques12 && options.cliques) {
      const std::uint64_t count = count_cliques(g, 12);
      if (row) {
        row->cliques = count;
        row->clique_size = 12;
      }
      add(ng.name + " 12-cliques", count == *ng.cliques12,
          std::to_string(count) + ", expected " + std::to_string(*ng.cliques12));
    }
  }
  return out;
}

std::string report_json(const SearchReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["group"] = report.group;
  doc["order"] = report.group_order;
  doc["max_degree"] = report.max_degree;
  auto& subs = doc["subgroups"] = ordered_json::array();
  for (const auto& s : report.subgroups) {
    ordered_json j;
    j["subgroup"] = s.name;
    j["structure"] = s.structure;
    j["order"] = s.order;
    j["index"] = s.index;
    if (s.skipped) {
      j["skipped"] = true;
    } else {
      j["rank"] = s.rank;
      j["primitive"] = s.primitive;
      j["selections"] = s.selections;
      j["srg_selections"] = s.srg_selections;
    }
    subs.push_back(std::move(j));
  }
  auto& rows = doc["rows"] = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json j;
    j["subgroup"] = r.subgroup;
    j["index"] = r.index;
    j["rank"] = r.rank;
    j["primitive"] = r.primitive;
    j["selection"] = r.selection;
    j["params"] = {r.params.v, r.params.k, r.params.lambda, r.params.mu};
    j["complement"] = {r.complement.v, r.complement.k, r.complement.lambda, r.complement.mu};
    j["fingerprint"] = hex64(r.fingerprint);
    j["file"] = r.file;
    if (!r.also_from.empty()) j["also_from"] = r.also_from;
    if (r.aut_order) {
      j["aut_order"] = *r.aut_order;
      j["aut_complete"] = r.aut_complete.value_or(false);
    }
    if (r.cliques) {
      j["clique_size"] = r.clique_size;
      j["cliques"] = *r.cliques;
    }
    rows.push_back(std::move(j));
  }
  doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

}  // namespace srgforge

#pragma once
// Property suites shared by the gtest property binary and the acceptance
// binary. Each suite returns the number of cases checked and the first
// failure, if any.

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "srgforge/construct.hpp"
#include "srgforge/fixtures.hpp"
#include "srgforge/graph6.hpp"
#include "srgforge/orbit_matrix.hpp"

namespace props {

using namespace srgforge;

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void check(bool condition, const std::string& what) {
    ++cases;
    if (condition) return;
    if (failures++ == 0) first_failure = what;
  }
};

struct Corpus {
  std::vector<std::pair<std::string, PermutationGroup>> groups;
  std::vector<std::pair<std::string, std::shared_ptr<const TransitiveAction>>> actions;
  std::vector<std::pair<std::string, Graph>> graphs;  // mixed: SRGs and others
};

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution edge(density);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

/// Fixture groups and actions, every suborbit-union graph of the actions of
/// degree <= 64, the orbit-matrix collapses, small named graphs and random
/// graphs.
inline Corpus make_corpus(const std::string& fixture_dir) {
  Corpus c;
  std::mt19937_64 rng(20240601);
  for (const char* name : {"a8", "u42"}) {
    const auto set = load_fixtures(fixture_dir + "/" + name + "/manifest.json", false);
    c.groups.emplace_back(set.name, set.group);
    for (const auto& s : set.subgroups) {
      c.groups.emplace_back(s.name, s.group);
      auto act = std::make_shared<const TransitiveAction>(coset_action(set.group, s.group));
      c.actions.emplace_back(s.name, act);
      if (act->degree() > 64) continue;
      for (const auto& sel : enumerate_selections(*act)) {
        if (sel.union_size + 1 == act->degree()) continue;  // complete graph
        std::string label = s.name + " [";
        for (auto i : sel.indices) label += std::to_string(i) + " ";
        c.graphs.emplace_back(label + "]", build_graph(sel));
      }
    }
    for (const auto& om : set.orbit_matrices) {
      const Graph g = named_graph(set, set.graph(om.graph));
      const auto m = column_orbit_matrix(g, orbit_partition(g, fixture_vertex_group(set, om)));
      for (auto& r : collapse(m)) c.graphs.emplace_back(om.name + " collapse", std::move(r.graph));
    }
  }
  for (std::size_t n : {5U, 9U, 10U}) {
    std::vector<Permutation> gens{random_permutation(n, rng), random_permutation(n, rng)};
    c.groups.emplace_back("random S" + std::to_string(n), PermutationGroup(n, gens));
  }
  c.groups.emplace_back("C7", PermutationGroup(7, {Permutation::from_cycles("(1,2,3,4,5,6,7)", 7)}));
  c.graphs.emplace_back("Petersen", petersen_graph());
  c.graphs.emplace_back("T(6)", triangular_graph(6));
  c.graphs.emplace_back("T(8)", triangular_graph(8));
  c.graphs.emplace_back("C5", cycle_graph(5));
  c.graphs.emplace_back("C6", cycle_graph(6));
  c.graphs.emplace_back("K7", complete_graph(7));
  c.graphs.emplace_back("P4", path_graph(4));
  c.graphs.emplace_back("K1", Graph(1));
  for (std::size_t n : {0U, 2U, 6U, 7U, 13U, 40U, 63U, 64U, 65U, 130U}) {
    c.graphs.emplace_back("random " + std::to_string(n), random_graph(n, 0.4, rng));
  }
  return c;
}

inline Outcome group_axioms(const Corpus& c) {
  Outcome out{"group axioms"};
  std::mt19937_64 rng(1);
  for (const auto& [name, g] : c.groups) {
    const auto id = Permutation::identity(g.degree());
    out.check(g.contains(id), name + ": identity");
    for (int t = 0; t < 20; ++t) {
      const auto a = g.random_element(rng), b = g.random_element(rng), x = g.random_element(rng);
      out.check(g.contains(a * b), name + ": closure");
      out.check((a * b) * x == a * (b * x), name + ": associativity");
      out.check(a * id == a && id * a == a, name + ": identity law");
      out.check(a * a.inverse() == id && g.contains(a.inverse()), name + ": inverse");
      out.check(g.order() % a.order() == 0, name + ": element order divides |G|");
    }
    for (const auto& gen : g.generators()) out.check(g.contains(gen), name + ": generator membership");
    if (g.order() <= 5000) {
      // Membership against the naive closure.
      const auto all = oracle::closure(g.generators(), g.degree());
      out.check(all.size() == g.order(), name + ": order vs closure");
      std::set<oracle::Images> listed;
      for (const auto& e : g.elements()) listed.insert(oracle::images_of(e));
      out.check(listed == all, name + ": elements vs closure");
      for (int t = 0; t < 50; ++t) {
        const auto p = random_permutation(g.degree(), rng);
        out.check(g.contains(p) == (all.count(oracle::images_of(p)) > 0), name + ": membership vs closure");
      }
    }
  }
  return out;
}

inline Outcome orbit_stabilizer(const Corpus& c) {
  Outcome out{"orbit-stabilizer"};
  for (const auto& [name, g] : c.groups) {
    for (Point p = 0; p < g.degree(); ++p) {
      out.check(g.orbit(p).size() * g.stabilizer(p).order() == g.order(), name + ": point " + std::to_string(p + 1));
    }
  }
  for (const auto& [name, act] : c.actions) {
    const auto& img = act->image_group();
    out.check(img.orbit(0).size() * img.stabilizer(0).order() == img.order(), name + ": coset action");
    std::size_t total = 0;
    for (const auto& s : act->suborbits()) total += s.size();
    out.check(total == act->degree(), name + ": suborbits partition the cosets");
  }
  return out;
}

inline Outcome pairing_involution(const Corpus& c) {
  Outcome out{"pairing involution"};
  std::mt19937_64 rng(2);
  for (const auto& [name, act] : c.actions) {
    const auto& subs = act->suborbits();
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::size_t j = subs[i].paired_with;
      out.check(subs[j].paired_with == i, name + ": paired twice");
      out.check(subs[j].size() == subs[i].size(), name + ": paired sizes");
      out.check(subs[i].self_paired == (i == j), name + ": self-paired flag");
    }
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(act->degree() - 1));
    for (int t = 0; t < 100; ++t) {
      const Point p = pick(rng), q = pick(rng);
      out.check(act->orbital(q, p) == subs[act->orbital(p, q)].paired_with, name + ": orbital(q,p)");
    }
    // Generator images are a homomorphic image of the ambient group.
    for (int t = 0; t < 10; ++t) {
      const auto a = act->ambient().random_element(rng), b = act->ambient().random_element(rng);
      out.check(act->image_of(a * b) == act->image_of(a) * act->image_of(b), name + ": homomorphism");
      const auto h = act->subgroup().random_element(rng);
      out.check(act->image_of(h)[act->base_point()] == act->base_point(), name + ": subgroup fixes the base coset");
    }
  }
  return out;
}

inline Outcome complement_involution(const Corpus& c) {
  Outcome out{"complement involution"};
  for (const auto& [name, g] : c.graphs) {
    const Graph h = complement(g);
    out.check(complement(h) == g, name + ": complement twice");
    out.check(h.edge_count() + g.edge_count() == g.order() * (g.order() - (g.order() > 0)) / 2, name + ": edge counts");
    if (auto p = is_strongly_regular(g)) {
      out.check(p->complement().complement() == *p, name + ": parameter complement twice");
      out.check(is_strongly_regular(h) == std::optional<SrgParams>(p->complement()), name + ": complement parameters");
    }
  }
  return out;
}

inline Outcome graph6_round_trip(const Corpus& c) {
  Outcome out{"graph6 round-trip"};
  for (const auto& [name, g] : c.graphs) {
    out.check(graph6_decode(graph6_encode(g)) == g, name + ": graph6");
    out.check(parse_adjacency_text(adjacency_text(g)) == g, name + ": adjacency text");
  }
  std::mt19937_64 rng(3);
  for (std::size_t n : {62U, 63U, 64U, 258U, 300U}) {
    const Graph g = random_graph(n, 0.3, rng);
    out.check(graph6_decode(graph6_encode(g)) == g, "random " + std::to_string(n) + ": graph6");
  }
  return out;
}

inline Outcome srg_oracle(const Corpus& c) {
  Outcome out{"SRG oracle, v <= 64"};
  for (const auto& [name, g] : c.graphs) {
    if (g.order() > 64) continue;
    out.check(is_strongly_regular(g) == oracle::srg(g), name);
    const Graph h = complement(g);
    out.check(is_strongly_regular(h) == oracle::srg(h), name + " complement");
  }
  return out;
}

inline std::vector<Outcome> run_all(const Corpus& c) {
  return {group_axioms(c),          orbit_stabilizer(c), pairing_involution(c),
          complement_involution(c), graph6_round_trip(c), srg_oracle(c)};
}

}  // namespace props

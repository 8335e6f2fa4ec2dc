#include "srgforge/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace srgforge {

std::vector<Point> OrbitSelection::points() const {
  std::vector<Point> out;
  for (std::size_t i : indices) {
    const auto& pts = action->suborbits()[i].points;
    out.insert(out.end(), pts.begin(), pts.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool OrbitSelection::pairing_closed() const {
  for (std::size_t i : indices) {
    std::size_t pair = action->suborbits()[i].paired_with;
    if (!std::binary_search(indices.begin(), indices.end(), pair)) return false;
  }
  return true;
}

bool OrbitSelection::contains_base_point() const {
  return std::any_of(indices.begin(), indices.end(),
                     [&](std::size_t i) { return action->suborbit_of(action->base_point()) == i; });
}

OrbitSelection make_selection(const TransitiveAction& action, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  OrbitSelection sel;
  sel.action = &action;
  for (std::size_t i : indices) {
    if (i >= action.rank()) throw InputError("suborbit index " + std::to_string(i) + " out of range");
    sel.union_size += action.suborbits()[i].size();
  }
  sel.indices = std::move(indices);
  return sel;
}

std::vector<std::vector<std::size_t>> pairing_classes(const TransitiveAction& action) {
  std::vector<std::vector<std::size_t>> classes;
  const auto& subs = action.suborbits();
  const std::size_t trivial = action.suborbit_of(action.base_point());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (i == trivial) continue;
    std::size_t pair = subs[i].paired_with;
    if (pair == i) {
      classes.push_back({i});
    } else if (pair > i) {
      classes.push_back({i, pair});
    }
  }
  return classes;
}

void for_each_selection(const TransitiveAction& action,
                        const std::function<void(const OrbitSelection&)>& visit) {
  auto classes = pairing_classes(action);
  if (classes.size() >= 63) throw BoundExceeded("too many pairing classes to enumerate selections");
  const std::uint64_t total = std::uint64_t{1} << classes.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::vector<std::size_t> indices;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if ((mask >> c) & 1U) indices.insert(indices.end(), classes[c].begin(), classes[c].end());
    }
    visit(make_selection(action, std::move(indices)));
  }
}

std::vector<OrbitSelection> enumerate_selections(const TransitiveAction& action) {
  std::vector<OrbitSelection> out;
  for_each_selection(action, [&](const OrbitSelection& s) { out.push_back(s); });
  return out;
}

Graph build_graph(const OrbitSelection& selection) {
  if (selection.action == nullptr) throw InputError("selection without action");
  if (!selection.pairing_closed()) {
    throw InputError("selection is not closed under pairing; adjacency would be asymmetric");
  }
  if (selection.contains_base_point()) throw InputError("selection contains the trivial suborbit");
  const TransitiveAction& act = *selection.action;
  const auto delta = selection.points();
  Graph g(act.degree());
  for (Point i = 0; i < act.degree(); ++i) {
    const Permutation& carrier = act.carrier(i);
    for (Point d : delta) {
      Point j = carrier[d];
      if (i < j) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

std::vector<Point> transport(const std::vector<Point>& set, const Permutation& g) {
  std::vector<Point> out(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out[i] = g[set[i]];
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DesignResult construct_design(const TransitiveAction& omega1, const TransitiveAction& omega2,
                              std::span<const Point> representatives, std::uint64_t element_bound) {
  if (omega1.ambient().generators() != omega2.ambient().generators()) {
    throw InputError("construct_design: actions of different ambient groups");
  }
  if (representatives.empty()) throw InputError("construct_design: no orbit representatives");
  const std::size_t m = omega1.degree();
  const std::size_t n = omega2.degree();
  for (Point d : representatives) {
    if (d >= n) throw InputError("construct_design: representative outside Omega_2");
  }

  // G acting on the disjoint union Omega_1 + Omega_2.
  std::vector<Permutation> combined;
  for (std::size_t s = 0; s < omega1.generator_images().size(); ++s) {
    std::vector<Point> images(m + n);
    for (Point i = 0; i < m; ++i) images[i] = omega1.generator_images()[s][i];
    for (Point j = 0; j < n; ++j) images[m + j] = static_cast<Point>(m + omega2.generator_images()[s][j]);
    combined.push_back(Permutation(std::move(images)));
  }
  PermutationGroup group(m + n, combined, {omega1.base_point()});
  PermutationGroup alpha_stab = group.stabilizer(omega1.base_point());

  DesignResult result;
  result.points = n;
  result.stabilizer_order = alpha_stab.order();

  std::vector<bool> in_delta(n, false);
  std::vector<std::size_t> rep_orbit_sizes;
  std::vector<Point> delta;
  for (Point d : representatives) {
    if (in_delta[d]) throw InputError("construct_design: representatives share a G_alpha-orbit");
    for (Point p : alpha_stab.orbit(static_cast<Point>(m + d))) {
      in_delta[p - m] = true;
      delta.push_back(static_cast<Point>(p - m));
    }
    PermutationGroup delta_stab = group.stabilizer(static_cast<Point>(m + d));
    rep_orbit_sizes.push_back(delta_stab.orbit(omega1.base_point()).size());
  }
  std::sort(delta.begin(), delta.end());
  result.block_size = delta.size();

  if (delta.size() == n) {
    result.degenerate = true;
    result.blocks = {delta};
    result.replication = 1;
    result.block_count = 1;
    result.set_stabilizer_order = group.order();
    result.formula_block_count = 1;
    result.formula_replication = 1;
    return result;
  }

  std::set<std::vector<Point>> seen{delta};
  std::vector<std::vector<Point>> blocks{delta};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (const auto& g : omega2.generator_images()) {
      auto image = transport(blocks[i], g);
      if (seen.insert(image).second) blocks.push_back(std::move(image));
    }
  }
  std::sort(blocks.begin(), blocks.end());
  result.block_count = blocks.size();

  std::vector<std::size_t> hits(n, 0);
  for (const auto& b : blocks) {
    for (Point p : b) ++hits[p];
  }
  if (std::adjacent_find(hits.begin(), hits.end(), std::not_equal_to<>()) != hits.end()) {
    throw std::logic_error("construct_design: replication is not constant");
  }
  result.replication = hits.empty() ? 0 : hits.front();
  result.blocks = std::move(blocks);

  std::uint64_t set_stab = 0;
  group.for_each_element(
      [&](const Permutation& g) {
        bool fixes = true;
        for (Point p : delta) {
          if (!in_delta[g[static_cast<Point>(m + p)] - m]) {
            fixes = false;
            break;
          }
        }
        if (fixes) ++set_stab;
      },
      element_bound);
  result.set_stabilizer_order = set_stab;
  const std::uint64_t ratio = result.stabilizer_order / set_stab;
  result.formula_block_count = m * result.stabilizer_order / set_stab;
  std::uint64_t orbit_sum = 0;
  for (auto s : rep_orbit_sizes) orbit_sum += s;
  result.formula_replication = result.stabilizer_order % set_stab == 0 ? ratio * orbit_sum : 0;
  return result;
}

std::vector<std::vector<bool>> incidence_matrix(const DesignResult& design) {
  std::vector<std::vector<bool>> m(design.points, std::vector<bool>(design.blocks.size(), false));
  for (std::size_t b = 0; b < design.blocks.size(); ++b) {
    for (Point p : design.blocks[b]) m[p][b] = true;
  }
  return m;
}

OrbitalAlgebra::OrbitalAlgebra(const TransitiveAction& action)
    : rank_(action.rank()), degree_(static_cast<std::int64_t>(action.degree())) {
  const auto& subs = action.suborbits();
  for (const auto& s : subs) sizes_.push_back(static_cast<std::int64_t>(s.size()));
  table_.assign(rank_ * rank_ * rank_, 0);
  for (Point gamma = 0; gamma < action.degree(); ++gamma) {
    const std::size_t i = action.suborbit_of(gamma);
    for (std::size_t l = 0; l < rank_; ++l) {
      const std::size_t j = action.orbital(gamma, subs[l].least());
      ++table_[(i * rank_ + j) * rank_ + l];
    }
  }
}

std::int64_t OrbitalAlgebra::square_entry(std::span<const std::size_t> selection, std::size_t l) const {
  std::int64_t total = 0;
  for (std::size_t i : selection) {
    for (std::size_t j : selection) total += value(i, j, l);
  }
  return total;
}

std::optional<SrgParams> OrbitalAlgebra::srg_parameters(std::span<const std::size_t> selection) const {
  if (selection.empty()) return std::nullopt;
  std::int64_t k = 0;
  std::vector<bool> chosen(rank_, false);
  for (std::size_t i : selection) {
    k += sizes_[i];
    chosen[i] = true;
  }
  if (k <= 0 || k >= degree_ - 1) return std::nullopt;
  const std::int64_t lambda = square_entry(selection, selection.front());
  std::optional<std::int64_t> mu;
  for (std::size_t l = 1; l < rank_; ++l) {
    if (!chosen[l]) {
      mu = square_entry(selection, l);
      break;
    }
  }
  if (!mu || *mu <= 0) return std::nullopt;
  SrgParams p{degree_, k, lambda, *mu};
  if (!p.satisfies_counting_identity()) return std::nullopt;
  for (std::size_t l = 1; l < rank_; ++l) {
    if (square_entry(selection, l) != (chosen[l] ? lambda : *mu)) return std::nullopt;
  }
  return p;
}

}  // namespace srgforge

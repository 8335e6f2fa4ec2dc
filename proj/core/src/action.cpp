#include "srgforge/action.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace srgforge {

namespace {

std::vector<Point> apply_tuple(const std::vector<Point>& tuple, const Permutation& x) {
  std::vector<Point> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = x[tuple[i]];
  return out;
}

}  // namespace

std::vector<Point> TransitiveAction::key_of(const Permutation& x) const {
  std::vector<Point> best;
  std::vector<Point> candidate(base_.size());
  for (const auto& hb : subgroup_base_images_) {
    for (std::size_t i = 0; i < hb.size(); ++i) candidate[i] = x[hb[i]];
    if (best.empty() || candidate < best) best = candidate;
  }
  return best;
}

std::size_t TransitiveAction::lookup(const std::vector<Point>& key) const {
  auto it = key_index_.find(key);
  if (it == key_index_.end()) throw InputError("coset key not found; element outside the ambient group?");
  return it->second;
}

Permutation TransitiveAction::image_of(const Permutation& g) const {
  if (g.degree() != ambient_.degree()) throw InputError("image_of: degree mismatch");
  std::vector<Point> images(degree());
  for (Point i = 0; i < degree(); ++i) {
    images[i] = static_cast<Point>(lookup(key_of(compose(representatives_[i], g))));
  }
  return Permutation(std::move(images));
}

const Permutation& TransitiveAction::carrier(Point p) const {
  // image_group_ is built with base prefix {alpha}, so level 0 always exists.
  const Permutation* u = image_group_.transversal(0, p);
  if (u == nullptr) throw InputError("carrier: point not in the orbit of the base point");
  return *u;
}

std::size_t TransitiveAction::orbital(Point p, Point q) const {
  return suborbit_of_[inverse_carriers_[p][q]];
}

TransitiveAction coset_action(const PermutationGroup& group, const PermutationGroup& subgroup,
                              std::size_t index_bound) {
  if (subgroup.degree() != group.degree()) {
    throw InputError("subgroup degree " + std::to_string(subgroup.degree()) +
                     " differs from group degree " + std::to_string(group.degree()));
  }
  for (const auto& h : subgroup.generators()) {
    if (!group.contains(h)) {
      throw InputError("subgroup generator " + h.to_cycles() + " is not in the group");
    }
  }
  const std::uint64_t index = group.order() / subgroup.order();
  if (index > index_bound) {
    throw BoundExceeded("index " + std::to_string(index) + " exceeds index bound " +
                        std::to_string(index_bound) + " (raise --max-degree / index bound)");
  }

  TransitiveAction act;
  act.ambient_ = group;
  act.subgroup_ = subgroup;
  act.base_ = group.base();
  if (act.base_.empty()) act.base_.push_back(0);
  subgroup.for_each_element(
      [&](const Permutation& h) { act.subgroup_base_images_.push_back(apply_tuple(act.base_, h)); });

  const std::size_t degree = static_cast<std::size_t>(index);
  const auto& gens = group.generators();
  std::vector<std::vector<Point>> image_table(gens.size(), std::vector<Point>(degree, 0));

  Permutation identity = Permutation::identity(group.degree());
  act.keys_.push_back(act.key_of(identity));
  act.key_index_.emplace(act.keys_.back(), 0);
  act.representatives_.push_back(identity);
  for (std::size_t i = 0; i < act.representatives_.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = compose(act.representatives_[i], gens[s]);
      auto key = act.key_of(y);
      auto [it, inserted] = act.key_index_.emplace(key, static_cast<Point>(act.keys_.size()));
      if (inserted) {
        if (act.keys_.size() >= degree) {
          throw InputError("coset enumeration exceeded |G|/|H|; subgroup data inconsistent");
        }
        act.keys_.push_back(std::move(key));
        act.representatives_.push_back(std::move(y));
      }
      image_table[s][i] = it->second;
    }
  }
  if (act.representatives_.size() != degree) {
    throw InputError("coset enumeration found " + std::to_string(act.representatives_.size()) +
                     " cosets, expected " + std::to_string(degree));
  }

  for (auto& images : image_table) {
    act.generator_images_.push_back(Permutation(std::move(images)));
  }
  act.image_group_ = PermutationGroup(degree, act.generator_images_, {0});

  // Suborbits: orbits of the point stabilizer of the base point.
  PermutationGroup stab = act.image_group_.stabilizer(0);
  auto orbs = stab.orbits();
  for (auto& o : orbs) std::sort(o.begin(), o.end());
  std::sort(orbs.begin(), orbs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  act.suborbit_of_.assign(degree, 0);
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    for (Point p : orbs[i]) act.suborbit_of_[p] = i;
    act.suborbits_.push_back(Suborbit{std::move(orbs[i]), i, true});
  }
  act.inverse_carriers_.reserve(degree);
  for (Point p = 0; p < degree; ++p) act.inverse_carriers_.push_back(act.carrier(p).inverse());
  for (auto& sub : act.suborbits_) {
    Point back = act.inverse_carriers_[sub.least()][act.base_point()];
    sub.paired_with = act.suborbit_of_[back];
    sub.self_paired = sub.paired_with == act.suborbit_of_[sub.least()];
  }
  return act;
}

const std::vector<Suborbit>& suborbits(const TransitiveAction& action) { return action.suborbits(); }

const Suborbit& paired_orbit(const TransitiveAction& action, const Suborbit& delta) {
  if (delta.points.empty()) throw InputError("paired_orbit: empty point set");
  const auto& subs = action.suborbits();
  std::vector<Point> sorted = delta.points;
  std::sort(sorted.begin(), sorted.end());
  const Suborbit& match = subs[action.suborbit_of(sorted.front())];
  if (match.points != sorted) throw InputError("paired_orbit: point set is not a suborbit");
  return subs[match.paired_with];
}

std::vector<bool> minimal_block(std::span<const Permutation> generators, Point a, Point b) {
  const std::size_t n = generators.empty() ? 0 : generators.front().degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Point, Point>> queue;
  auto unite = [&](Point x, Point y) {
    Point rx = find(x);
    Point ry = find(y);
    if (rx == ry) return;
    if (ry < rx) std::swap(rx, ry);
    parent[ry] = rx;
    queue.emplace_back(rx, ry);
  };
  unite(a, b);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [x, y] = queue[i];
    for (const auto& g : generators) unite(g[x], g[y]);
  }
  std::vector<bool> block(n, false);
  Point root = find(a);
  for (Point x = 0; x < n; ++x) block[x] = find(x) == root;
  return block;
}

bool is_primitive(const TransitiveAction& action) {
  const std::size_t n = action.degree();
  if (n <= 2) return true;
  const auto& gens = action.generator_images();
  for (Point beta = 1; beta < n; ++beta) {
    auto block = minimal_block(gens, action.base_point(), beta);
    if (static_cast<std::size_t>(std::count(block.begin(), block.end(), true)) < n) return false;
  }
  return true;
}

}  // namespace srgforge

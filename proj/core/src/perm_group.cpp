#include "srgforge/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace srgforge {

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw InputError("generator of degree " + std::to_string(g.degree()) +
                       " in group of degree " + std::to_string(degree_));
    }
  }
  for (Point b : base_prefix) {
    if (b >= degree_) throw InputError("base point out of range");
    bool duplicate = std::any_of(levels_.begin(), levels_.end(),
                                 [b](const Level& l) { return l.base == b; });
    if (!duplicate) push_level(b);
  }
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    auto [residue, level] = sift(g, 0);
    if (!residue.is_identity()) add_generator(0, g);
  }
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return PermutationGroup(degree, {Permutation::identity(degree)});
}

void PermutationGroup::push_level(Point base) {
  Level level;
  level.base = base;
  level.orbit = {base};
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[base] = 0;
  level.transversal.push_back(Permutation::identity(degree_));
  level.inverse_transversal.push_back(Permutation::identity(degree_));
  level.checked.push_back(0);
  levels_.push_back(std::move(level));
}

PermutationGroup::SiftResult PermutationGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    Point image = g[level.base];
    std::int32_t idx = level.orbit_index[image];
    if (idx < 0) return {std::move(g), i};
    if (idx != 0) g = compose(g, level.inverse_transversal[static_cast<std::size_t>(idx)]);
  }
  return {std::move(g), levels_.size()};
}

void PermutationGroup::add_generator(std::size_t level_no, const Permutation& g) {
  if (level_no == levels_.size()) push_level(g.first_moved());
  levels_[level_no].generators.push_back(g);

  // Close the basic orbit under the enlarged generating set.
  {
    Level& level = levels_[level_no];
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
      for (const auto& s : level.generators) {
        Point image = s[level.orbit[i]];
        if (level.orbit_index[image] >= 0) continue;
        level.orbit_index[image] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(image);
        Permutation u = compose(level.transversal[i], s);
        level.inverse_transversal.push_back(u.inverse());
        level.transversal.push_back(std::move(u));
        level.checked.push_back(0);
      }
    }
  }

  // Every Schreier generator must sift through the levels below. Deeper
  // recursion only touches levels > level_no, so this level's orbit is stable
  // during the loop, but levels_ may reallocate: index, don't hold references.
  for (std::size_t i = 0; i < levels_[level_no].orbit.size(); ++i) {
    while (levels_[level_no].checked[i] < levels_[level_no].generators.size()) {
      const Level& level = levels_[level_no];
      const Permutation& s = level.generators[level.checked[i]];
      Point beta = level.orbit[i];
      Point gamma = s[beta];
      auto gamma_idx = static_cast<std::size_t>(level.orbit_index[gamma]);
      Permutation schreier =
          compose(compose(level.transversal[i], s), level.inverse_transversal[gamma_idx]);
      levels_[level_no].checked[i]++;
      if (schreier.is_identity()) continue;
      auto [residue, stop] = sift(std::move(schreier), level_no + 1);
      if (!residue.is_identity()) add_generator(level_no + 1, residue);
    }
  }
}

std::uint64_t PermutationGroup::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(level.orbit.size()), &next)) {
      throw BoundExceeded("group order does not fit in 64 bits");
    }
    result = next;
  }
  return result;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw InputError("membership test: degree " + std::to_string(p.degree()) + " vs group degree " +
                     std::to_string(degree_));
  }
  return sift(p, 0).residue.is_identity();
}

std::vector<Point> PermutationGroup::orbit(Point point) const {
  if (point >= degree_) throw InputError("orbit: point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (const auto& g : generators_) {
      Point image = g[result[i]];
      if (!seen[image]) {
        seen[image] = true;
        result.push_back(image);
      }
    }
  }
  return result;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> result;
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit(p);
    for (Point q : orb) seen[q] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermutationGroup::is_transitive() const {
  return degree_ == 0 || orbit(0).size() == degree_;
}

PermutationGroup PermutationGroup::stabilizer(Point point) const {
  if (point >= degree_) throw InputError("stabilizer: point out of range");
  const Point points[] = {point};
  return pointwise_stabilizer(points);
}

PermutationGroup PermutationGroup::pointwise_stabilizer(std::span<const Point> points) const {
  PermutationGroup chain(degree_, generators_, std::vector<Point>(points.begin(), points.end()));
  // Prefix levels are created in order, so level points.size() (after
  // duplicate removal) is the pointwise stabilizer.
  std::size_t depth = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::find(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(i), points[i]) ==
        points.begin() + static_cast<std::ptrdiff_t>(i)) {
      ++depth;
    }
  }
  if (depth >= chain.levels_.size() || chain.levels_[depth].generators.empty()) {
    return trivial(degree_);
  }
  std::vector<Point> rest;
  for (std::size_t i = depth; i < chain.levels_.size(); ++i) rest.push_back(chain.levels_[i].base);
  return PermutationGroup(degree_, chain.levels_[depth].generators, std::move(rest));
}

void PermutationGroup::for_each_element(const std::function<void(const Permutation&)>& visit,
                                        std::uint64_t bound) const {
  std::uint64_t total = order();
  if (total > bound) {
    throw BoundExceeded("group order " + std::to_string(total) + " exceeds element bound " +
                        std::to_string(bound) + " (raise the bound to enumerate)");
  }
  // g = u_{d-1} ... u_1 u_0 with u_i from the level-i transversal.
  const std::size_t depth = levels_.size();
  if (depth == 0) {
    visit(Permutation::identity(degree_));
    return;
  }
  std::vector<std::size_t> index(depth, 0);
  // partial[i] = u_{d-1} ... u_i
  std::vector<Permutation> partial(depth + 1, Permutation::identity(degree_));
  for (std::size_t i = depth; i-- > 0;) {
    partial[i] = compose(partial[i + 1], levels_[i].transversal[0]);
  }
  for (;;) {
    visit(partial[0]);
    std::size_t i = 0;
    while (i < depth && ++index[i] == levels_[i].orbit.size()) {
      index[i] = 0;
      ++i;
    }
    if (i == depth) break;
    for (std::size_t j = i + 1; j-- > 0;) {
      partial[j] = compose(partial[j + 1], levels_[j].transversal[index[j]]);
    }
  }
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t bound) const {
  std::vector<Permutation> result;
  result.reserve(static_cast<std::size_t>(std::min(order(), bound)));
  for_each_element([&](const Permutation& p) { result.push_back(p); }, bound);
  return result;
}

Permutation PermutationGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[i].orbit.size() - 1);
    g = compose(g, levels_[i].transversal[pick(rng)]);
  }
  return g;
}

std::vector<Point> PermutationGroup::base() const {
  std::vector<Point> result;
  result.reserve(levels_.size());
  for (const auto& level : levels_) result.push_back(level.base);
  return result;
}

const Permutation* PermutationGroup::transversal(std::size_t level, Point point) const {
  std::int32_t idx = levels_[level].orbit_index[point];
  if (idx < 0) return nullptr;
  return &levels_[level].transversal[static_cast<std::size_t>(idx)];
}

}  // namespace srgforge

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "srgforge/permutation.hpp"

namespace srgforge {

/// Raised when a configured size limit (element count, index, search nodes)
/// would be exceeded. The message names the limit so the caller can raise it.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultElementBound = 1'000'000;

/// A permutation group given by generators, with a stabilizer chain built by
/// deterministic Schreier-Sims at construction time. Immutable afterwards and
/// therefore safe to share between threads.
///
/// Base points are chosen as: the optional prefix supplied by the caller, then
/// the first point moved by a generator that reaches a new level.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::vector<Point> base_prefix = {});

  static PermutationGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// |G|, the product of the fundamental orbit lengths. Throws on 64-bit overflow.
  std::uint64_t order() const;

  /// Sifts p through the chain.
  bool contains(const Permutation& p) const;

  /// Orbit of `point` in breadth-first order, generators applied in order.
  std::vector<Point> orbit(Point point) const;
  /// All orbits, each in breadth-first order, sorted by least point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Generators of the point stabilizer G_point.
  PermutationGroup stabilizer(Point point) const;
  /// Pointwise stabilizer of a sequence of points.
  PermutationGroup pointwise_stabilizer(std::span<const Point> points) const;

  /// Calls `visit` once per group element. Throws BoundExceeded when the order
  /// exceeds `bound`.
  void for_each_element(const std::function<void(const Permutation&)>& visit,
                        std::uint64_t bound = kDefaultElementBound) const;
  std::vector<Permutation> elements(std::uint64_t bound = kDefaultElementBound) const;

  /// Uniformly random element (product of random coset representatives).
  Permutation random_element(std::mt19937_64& rng) const;

  // Chain inspection.
  std::size_t base_length() const { return levels_.size(); }
  std::vector<Point> base() const;
  /// Fundamental orbit of the i-th base point under the i-th chain subgroup.
  const std::vector<Point>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
  /// Strong generators of the i-th chain subgroup G^(i).
  const std::vector<Permutation>& strong_generators(std::size_t level) const {
    return levels_[level].generators;
  }
  /// Representative mapping the level's base point to `point`, if in the orbit.
  const Permutation* transversal(std::size_t level, Point point) const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index;  // point -> position in orbit or -1
    std::vector<Permutation> transversal;   // maps base to orbit[i]
    std::vector<Permutation> inverse_transversal;
    std::vector<std::size_t> checked;  // generators already tested per orbit point
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // level where sifting stopped (levels_.size() if it ran through)
  };

  SiftResult sift(Permutation g, std::size_t from) const;
  void add_generator(std::size_t level, const Permutation& g);
  void push_level(Point base);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

}  // namespace srgforge

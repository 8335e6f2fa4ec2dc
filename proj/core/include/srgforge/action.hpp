#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "srgforge/perm_group.hpp"

namespace srgforge {

inline constexpr std::size_t kDefaultIndexBound = 2000;

/// An orbit of the base-point stabilizer G_alpha on the coset space.
struct Suborbit {
  std::vector<Point> points;  // sorted ascending
  std::size_t paired_with = 0;
  bool self_paired = true;

  std::size_t size() const { return points.size(); }
  Point least() const { return points.front(); }
};

/// The right action of G on the right cosets Hx of a subgroup H. Coset 0 is
/// H itself and serves as the base point alpha; its stabilizer is the image
/// of H. Each coset is identified by the lexicographically least image of the
/// ambient base tuple over its elements.
class TransitiveAction {
 public:
  const PermutationGroup& ambient() const { return ambient_; }
  const PermutationGroup& subgroup() const { return subgroup_; }
  std::size_t degree() const { return representatives_.size(); }
  Point base_point() const { return 0; }

  /// Images of the ambient generators, in generator order.
  const std::vector<Permutation>& generator_images() const { return generator_images_; }
  /// The permutation group generated by generator_images(); its chain starts
  /// at the base point.
  const PermutationGroup& image_group() const { return image_group_; }

  /// Canonical key and an ambient representative x of coset i (coset = Hx).
  const std::vector<Point>& coset_key(Point i) const { return keys_[i]; }
  const Permutation& representative(Point i) const { return representatives_[i]; }

  /// Image of an arbitrary ambient element: coset Hx_i goes to Hx_i g.
  Permutation image_of(const Permutation& g) const;

  /// Orbits of the base-point stabilizer, ordered by (size, least point),
  /// with pairing filled in. suborbits()[0] is {alpha}.
  const std::vector<Suborbit>& suborbits() const { return suborbits_; }
  std::size_t rank() const { return suborbits_.size(); }
  /// Index of the suborbit containing a point.
  std::size_t suborbit_of(Point p) const { return suborbit_of_[p]; }
  /// An element of image_group() mapping the base point to `p`.
  const Permutation& carrier(Point p) const;
  /// Orbital of the ordered pair (p, q): the suborbit index of q g^-1 where
  /// g carries alpha to p.
  std::size_t orbital(Point p, Point q) const;

  friend TransitiveAction coset_action(const PermutationGroup& group,
                                       const PermutationGroup& subgroup, std::size_t index_bound);

 private:
  std::vector<Point> key_of(const Permutation& x) const;
  std::size_t lookup(const std::vector<Point>& key) const;

  PermutationGroup ambient_;
  PermutationGroup subgroup_;
  std::vector<Point> base_;
  std::vector<std::vector<Point>> subgroup_base_images_;
  std::vector<std::vector<Point>> keys_;
  std::map<std::vector<Point>, Point> key_index_;
  std::vector<Permutation> representatives_;
  std::vector<Permutation> generator_images_;
  PermutationGroup image_group_;
  std::vector<Suborbit> suborbits_;
  std::vector<std::size_t> suborbit_of_;
  std::vector<Permutation> inverse_carriers_;
};

/// Builds the action of G on the right cosets of H. Throws InputError if H is
/// not a subgroup of G and BoundExceeded if [G:H] > index_bound.
TransitiveAction coset_action(const PermutationGroup& group, const PermutationGroup& subgroup,
                              std::size_t index_bound = kDefaultIndexBound);

/// The suborbits of the action (orbits of G_alpha), pairing included.
const std::vector<Suborbit>& suborbits(const TransitiveAction& action);

/// The suborbit paired with `delta`, i.e. { alpha g : alpha g^-1 in delta }.
/// `delta` must equal one of the action's suborbits as a point set.
const Suborbit& paired_orbit(const TransitiveAction& action, const Suborbit& delta);

/// Smallest block of imprimitivity containing both points of the pair, as a
/// membership mask, for the group generated by `generators`.
std::vector<bool> minimal_block(std::span<const Permutation> generators, Point a, Point b);

/// True iff the image group preserves no nontrivial block system.
bool is_primitive(const TransitiveAction& action);

}  // namespace srgforge

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srgforge/action.hpp"
#include "srgforge/graph.hpp"

namespace srgforge {

/// A union of suborbits Delta_2 = delta_1 G_alpha u ... u delta_s G_alpha,
/// given by suborbit indices of a transitive action.
struct OrbitSelection {
  const TransitiveAction* action = nullptr;
  std::vector<std::size_t> indices;  // sorted
  std::size_t union_size = 0;

  /// Points of Delta_2, sorted.
  std::vector<Point> points() const;
  /// True when every selected suborbit's pair is selected too.
  bool pairing_closed() const;
  bool contains_base_point() const;
};

OrbitSelection make_selection(const TransitiveAction& action, std::vector<std::size_t> indices);

/// Pairing classes of the nontrivial suborbits: singletons for self-paired
/// suborbits, {i, i'} for mutually paired ones. Ordered by least index.
std::vector<std::vector<std::size_t>> pairing_classes(const TransitiveAction& action);

/// Streams every nonempty union of pairing classes (2^c - 1 selections for c
/// classes) in increasing bitmask order over the classes.
void for_each_selection(const TransitiveAction& action,
                        const std::function<void(const OrbitSelection&)>& visit);
std::vector<OrbitSelection> enumerate_selections(const TransitiveAction& action);

/// The orbital graph: i ~ j iff j lies in Delta_2 g for g carrying alpha to i.
/// Throws InputError if the selection is not pairing-closed or contains alpha.
Graph build_graph(const OrbitSelection& selection);

/// A 1-design on the points of Omega_2 whose blocks are the G-images of one
/// union of G_alpha-orbits.
struct DesignResult {
  std::size_t points = 0;
  std::vector<std::vector<Point>> blocks;  // distinct blocks, each sorted
  std::size_t block_size = 0;
  std::size_t replication = 0;  // measured by direct count
  std::size_t block_count = 0;
  bool degenerate = false;      // Delta_2 = Omega_2: one block, 1-(n,n,1)

  // Values predicted from group orders: b = m |G_alpha| / |G_Delta|,
  // r = (|G_alpha| / |G_Delta|) * sum_i |alpha G_{delta_i}|.
  std::uint64_t stabilizer_order = 0;      // |G_alpha|
  std::uint64_t set_stabilizer_order = 0;  // |G_Delta|, counted over group elements
  std::uint64_t formula_block_count = 0;
  std::uint64_t formula_replication = 0;

  bool formulas_agree() const {
    return degenerate || (formula_block_count == block_count && formula_replication == replication);
  }
};

/// Design on Omega_2 whose blocks are the images of Delta_2 = union of the
/// G_alpha-orbits of the given points of Omega_2, where alpha is the base
/// point of Omega_1. Both actions must come from the same ambient group.
DesignResult construct_design(const TransitiveAction& omega1, const TransitiveAction& omega2,
                              std::span<const Point> representatives,
                              std::uint64_t element_bound = kDefaultElementBound);

/// Incidence matrix of a design as a point x block 0/1 table.
std::vector<std::vector<bool>> incidence_matrix(const DesignResult& design);

/// Intersection numbers of the orbital scheme of a transitive action:
/// value(i, j, l) = #{gamma : (alpha, gamma) in R_i, (gamma, beta_l) in R_j}
/// with beta_l the least point of suborbit l.
class OrbitalAlgebra {
 public:
  explicit OrbitalAlgebra(const TransitiveAction& action);
  std::size_t rank() const { return rank_; }
  std::int64_t value(std::size_t i, std::size_t j, std::size_t l) const {
    return table_[(i * rank_ + j) * rank_ + l];
  }
  /// (A_S^2)[alpha, beta_l] for the union S of orbitals.
  std::int64_t square_entry(std::span<const std::size_t> selection, std::size_t l) const;
  /// Parameters of the union graph when it is strongly regular (0 < k < v-1,
  /// mu > 0), decided in the algebra without building the graph.
  std::optional<SrgParams> srg_parameters(std::span<const std::size_t> selection) const;

 private:
  std::size_t rank_ = 0;
  std::int64_t degree_ = 0;
  std::vector<std::int64_t> sizes_;
  std::vector<std::int64_t> table_;
};

}  // namespace srgforge

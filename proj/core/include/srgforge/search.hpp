#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srgforge/graph.hpp"
#include "srgforge/perm_group.hpp"

namespace srgforge {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Ordered partition of the vertex set. Cells are contiguous ranges of
/// `lab`, identified by their start position.
class OrderedPartition {
 public:
  explicit OrderedPartition(std::size_t n = 0);

  std::size_t size() const { return lab_.size(); }
  std::size_t cell_count() const { return cells_; }
  bool discrete() const { return cells_ == lab_.size(); }
  std::size_t cell_start(Point v) const { return cell_[v]; }
  std::size_t cell_length(std::size_t start) const { return len_[start]; }
  Point at(std::size_t position) const { return lab_[position]; }
  const std::vector<Point>& lab() const { return lab_; }

  /// Cell starts in increasing order.
  std::vector<std::size_t> cell_starts() const;
  /// Start of the smallest non-singleton cell (ties: least start), or size().
  std::size_t target_cell() const;
  std::vector<std::vector<Point>> cells() const;

  /// Moves v into a singleton cell at the front of its cell; returns the
  /// start of the singleton.
  std::size_t individualize(Point v);

  /// Splits cells until the partition is equitable, processing splitter cells
  /// from the queue (FIFO). Returns an isomorphism-invariant trace hash.
  std::uint64_t refine(const Graph& g, std::vector<std::size_t> splitters);

 private:
  std::vector<Point> lab_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> cell_;
  std::vector<std::uint32_t> len_;
  std::size_t cells_ = 0;
};

/// Coarsest equitable refinement of the unit partition, as vertex sets.
std::vector<std::vector<Point>> equitable_partition(const Graph& g);

struct AutomorphismResult {
  PermutationGroup group;
  /// False when the node budget ran out; `group` is then a subgroup of Aut.
  bool complete = false;
  std::uint64_t nodes = 0;
  std::uint64_t order() const { return group.order(); }
};

/// Aut(g) by individualization-refinement with orbit pruning: every vertex of
/// each first-path target cell is either shown equivalent to the first-path
/// choice by a discovered automorphism, or its subtree is exhausted.
AutomorphismResult automorphism_group(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Vertex map from the first graph to the second when isomorphic.
  std::optional<Permutation> mapping;
  std::uint64_t nodes = 0;
};

/// Exact decision. Throws BoundExceeded when the budget runs out.
IsomorphismResult find_isomorphism(const Graph& a, const Graph& b,
                                   std::uint64_t node_budget = kDefaultNodeBudget);
bool are_isomorphic(const Graph& a, const Graph& b, std::uint64_t node_budget = kDefaultNodeBudget);

/// Isomorphism-invariant digest: order, degree sequence, common-neighbour
/// and local clique statistics over edges and non-edges, the number of
/// 5-cliques, the equitable
/// refinement trace, plus the traces after individualizing each vertex of the
/// first target cell. Equal digests are necessary for isomorphism.
std::uint64_t invariant_fingerprint(const Graph& g);

}  // namespace srgforge

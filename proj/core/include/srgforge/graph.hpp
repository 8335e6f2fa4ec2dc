#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srgforge/permutation.hpp"

namespace srgforge {

/// Simple undirected graph stored as dense adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertices);

  std::size_t order() const { return vertices_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  /// Adds the undirected edge {i, j}; loops are rejected.
  void add_edge(std::size_t i, std::size_t j);
  void remove_edge(std::size_t i, std::size_t j);

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  /// |N(i) and N(j)|
  std::size_t common_neighbours(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> neighbours(std::size_t i) const;

  /// The graph with vertex i renamed p[i].
  Graph relabelled(const Permutation& p) const;
  bool is_automorphism(const Permutation& p) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertices_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return total;
}

/// Parameters (v, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  /// k(k - lambda - 1) == (v - k - 1) mu
  bool satisfies_counting_identity() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
  SrgParams complement() const { return {v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lambda}; }
  std::string to_string() const;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

/// Regularity profile of a graph: degree and the common-neighbour counts when
/// they are constant. Unlike is_strongly_regular this also describes the
/// complete, empty and disconnected (mu = 0) cases.
struct RegularityProfile {
  bool regular = false;
  std::int64_t k = 0;
  std::optional<std::int64_t> lambda;  // set when constant over edges (or no edges)
  std::optional<std::int64_t> mu;      // set when constant over non-edges (or none)
};
RegularityProfile regularity_profile(const Graph& g);

/// (v, k, lambda, mu) when g is strongly regular with 0 < k < v - 1 and mu > 0.
std::optional<SrgParams> is_strongly_regular(const Graph& g);

class InfeasibleParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalue data of an SRG parameter set. The restricted eigenvalues are
/// ((lambda - mu) +- sqrt(discriminant)) / 2; when the discriminant is not a
/// perfect square (conference case) `integral` is false and r, s are unset.
struct SrgEigenvalues {
  std::int64_t discriminant = 0;
  bool integral = false;
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t f = 0;  // multiplicity of r
  std::int64_t g = 0;  // multiplicity of s
};

/// Throws InputError when the counting identity fails and
/// InfeasibleParameters when the multiplicities are not nonnegative integers.
SrgEigenvalues srg_feasibility(const SrgParams& p);
bool is_feasible(const SrgParams& p);

/// All (lambda, mu) completing (v, k) to a feasible SRG with mu > 0.
std::vector<SrgParams> feasible_parameters(std::int64_t v, std::int64_t k);

/// Off-diagonal complement.
Graph complement(const Graph& g);

/// Exact check of A^2 = kI + lambda A + mu (J - I - A) on the given rows (all
/// rows when empty).
bool satisfies_srg_matrix_identity(const Graph& g, const SrgParams& p,
                                   std::span<const std::size_t> rows = {});

// Small named graphs used by tests, tools and benchmarks.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();
/// T(n): 2-subsets of {0..n-1}, adjacent when they intersect.
Graph triangular_graph(std::size_t n);

}  // namespace srgforge

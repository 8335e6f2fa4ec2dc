#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srgforge/graph.hpp"
#include "srgforge/perm_group.hpp"

namespace srgforge {

/// Column orbit matrix C of an SRG under a vertex partition O_1..O_t:
/// entries[i][j] is the number of neighbours in O_i of any vertex of O_j.
struct OrbitMatrix {
  std::vector<std::int64_t> lengths;               // n_1..n_t
  std::vector<std::vector<std::int64_t>> entries;  // t x t
  SrgParams params;                                // of the source graph

  std::size_t t() const { return lengths.size(); }
  friend bool operator==(const OrbitMatrix&, const OrbitMatrix&) = default;
};

/// Orbits of H on the vertices, sorted by least vertex. Every generator of H
/// must be an automorphism of g (InputError otherwise).
std::vector<std::vector<Point>> orbit_partition(const Graph& g, const PermutationGroup& h);

/// Builds C for a strongly regular g. Throws InputError when g is not an SRG,
/// the partition is not a partition of the vertex set, or a column sum is not
/// constant inside a block. The result is validated before it is returned.
OrbitMatrix column_orbit_matrix(const Graph& g, const std::vector<std::vector<Point>>& partition);

enum class OrbitMatrixCheck {
  Shape,           // lengths/entries malformed, sum of lengths != v, entry out of [0, n_i]
  ColumnSum,       // sum_i c_ij = k
  WeightedRowSum,  // sum_j n_j c_ij = k n_i
  Quadratic,       // sum_s n_s c_is c_js = n_j (delta_ij (k - mu) + mu n_i + (lambda - mu) c_ij)
};
std::string to_string(OrbitMatrixCheck check);

struct OrbitMatrixViolation {
  OrbitMatrixCheck check;
  std::size_t i = 0;  // 0-based; for ColumnSum only j is meaningful
  std::size_t j = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct OrbitMatrixVerdict {
  std::vector<OrbitMatrixViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the defining equations with denominators cleared, so every
/// comparison is an exact integer identity.
OrbitMatrixVerdict validate_orbit_matrix(const OrbitMatrix& m);

struct CollapseSpec {
  std::int64_t x = 0;  // becomes 1
  std::int64_t y = 0;  // becomes 0
  std::int64_t d = 0;  // diagonal value
  std::int64_t n = 0;  // common orbit length
};

/// Parameters (t, a, b, c) predicted from x, y, d, n and the source SRG.
struct CollapsePrediction {
  std::int64_t t = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  SrgParams params() const { return {t, a, b, c}; }
};

struct CollapseResult {
  CollapseSpec spec;
  Graph graph;
  CollapsePrediction prediction;
  SrgParams params;  // measured on graph
};

/// Raised when a matrix does not meet the collapse preconditions.
class CollapseError : public InputError {
 public:
  using InputError::InputError;
};

/// Both assignments (x, y) and (y, x) of the two off-diagonal values, in
/// increasing order of x. Requires equal lengths, constant diagonal, symmetric
/// C and exactly two off-diagonal values (CollapseError otherwise). A
/// collapsed graph that is not strongly regular or disagrees with its
/// prediction raises std::logic_error.
std::vector<CollapseResult> collapse(const OrbitMatrix& m);

struct GeneralizedCollapse {
  std::int64_t value = 0;  // off-diagonal value mapped to 1
  Graph graph;
  SrgParams params;
};

/// For each distinct off-diagonal value w (ascending), maps w to 1 and every
/// other entry to 0 and keeps the strongly regular results. Requires equal
/// lengths and a constant diagonal.
std::vector<GeneralizedCollapse> generalized_collapse(const OrbitMatrix& m);

/// Text form: `t n_1 .. n_t`, then `v k lambda mu`, then t rows of t integers.
/// `#` starts a comment.
std::string format_orbit_matrix(const OrbitMatrix& m);
OrbitMatrix parse_orbit_matrix(std::string_view text);

}  // namespace srgforge

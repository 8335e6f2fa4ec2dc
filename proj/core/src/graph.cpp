#include "srgforge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace srgforge {

Graph::Graph(std::size_t vertices)
    : vertices_(vertices), words_((vertices + 63) / 64), bits_(vertices * ((vertices + 63) / 64), 0) {}

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) throw InputError("loops are not allowed");
  if (i >= vertices_ || j >= vertices_) throw InputError("vertex out of range");
  bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

void Graph::remove_edge(std::size_t i, std::size_t j) {
  bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  bits_[j * words_ + i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t Graph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (auto w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < vertices_; ++i) total += degree(i);
  return total / 2;
}

std::size_t Graph::common_neighbours(std::size_t i, std::size_t j) const {
  return popcount_and(row(i), row(j));
}

std::vector<std::size_t> Graph::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  auto r = row(i);
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

Graph Graph::relabelled(const Permutation& p) const {
  if (p.degree() != vertices_) throw InputError("relabelled: permutation degree mismatch");
  Graph out(vertices_);
  for (std::size_t i = 0; i < vertices_; ++i) {
    for (std::size_t j : neighbours(i)) {
      if (i < j) out.add_edge(p[static_cast<Point>(i)], p[static_cast<Point>(j)]);
    }
  }
  return out;
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != vertices_) return false;
  for (std::size_t i = 0; i < vertices_; ++i) {
    std::size_t pi = p[static_cast<Point>(i)];
    if (degree(i) != degree(pi)) return false;
    for (std::size_t j : neighbours(i)) {
      if (!adjacent(pi, p[static_cast<Point>(j)])) return false;
    }
  }
  return true;
}

std::string SrgParams::to_string() const {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         std::to_string(mu) + ")";
}

RegularityProfile regularity_profile(const Graph& g) {
  RegularityProfile out;
  const std::size_t v = g.order();
  if (v == 0) {
    out.regular = true;
    return out;
  }
  out.k = static_cast<std::int64_t>(g.degree(0));
  for (std::size_t i = 1; i < v; ++i) {
    if (static_cast<std::int64_t>(g.degree(i)) != out.k) return out;
  }
  out.regular = true;
  bool lambda_ok = true;
  bool mu_ok = true;
  for (std::size_t i = 0; i < v && (lambda_ok || mu_ok); ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      auto c = static_cast<std::int64_t>(g.common_neighbours(i, j));
      auto& slot = g.adjacent(i, j) ? out.lambda : out.mu;
      bool& ok = g.adjacent(i, j) ? lambda_ok : mu_ok;
      if (!ok) continue;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        ok = false;
      }
    }
  }
  if (!lambda_ok) out.lambda.reset();
  if (!mu_ok) out.mu.reset();
  // A graph without edges (or non-edges) has the count vacuously constant.
  if (lambda_ok && !out.lambda) out.lambda = 0;
  if (mu_ok && !out.mu) out.mu = 0;
  return out;
}

std::optional<SrgParams> is_strongly_regular(const Graph& g) {
  const auto v = static_cast<std::int64_t>(g.order());
  if (v < 1) return std::nullopt;
  RegularityProfile prof = regularity_profile(g);
  if (!prof.regular || !prof.lambda || !prof.mu) return std::nullopt;
  if (prof.k <= 0 || prof.k >= v - 1 || *prof.mu <= 0) return std::nullopt;
  return SrgParams{v, prof.k, *prof.lambda, *prof.mu};
}

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

SrgEigenvalues srg_feasibility(const SrgParams& p) {
  if (!p.satisfies_counting_identity()) {
    throw InputError("counting identity k(k-lambda-1) = (v-k-1)mu fails for " + p.to_string());
  }
  SrgEigenvalues e;
  const std::int64_t diff = p.lambda - p.mu;
  e.discriminant = diff * diff + 4 * (p.k - p.mu);
  const std::int64_t n = 2 * p.k + (p.v - 1) * diff;
  const std::int64_t root = isqrt(e.discriminant);
  if (root >= 0 && root * root == e.discriminant && root > 0) {
    e.integral = true;
    e.r = (diff + root) / 2;
    e.s = (diff - root) / 2;
    if (n % root != 0 || ((p.v - 1) - n / root) % 2 != 0) {
      throw InfeasibleParameters("non-integral multiplicities for " + p.to_string());
    }
    e.f = ((p.v - 1) - n / root) / 2;
    e.g = ((p.v - 1) + n / root) / 2;
    if (e.f < 0 || e.g < 0) throw InfeasibleParameters("negative multiplicity for " + p.to_string());
    return e;
  }
  if (n != 0 || (p.v - 1) % 2 != 0) {
    throw InfeasibleParameters("irrational eigenvalues outside the conference case for " +
                               p.to_string());
  }
  e.f = e.g = (p.v - 1) / 2;
  return e;
}

bool is_feasible(const SrgParams& p) {
  try {
    srg_feasibility(p);
    return true;
  } catch (const std::runtime_error&) {
    return false;
  }
}

std::vector<SrgParams> feasible_parameters(std::int64_t v, std::int64_t k) {
  std::vector<SrgParams> out;
  if (k <= 0 || k >= v - 1) return out;
  for (std::int64_t mu = 1; mu <= k; ++mu) {
    // k(k - lambda - 1) = (v - k - 1) mu determines lambda.
    std::int64_t rhs = (v - k - 1) * mu;
    if (rhs % k != 0) continue;
    std::int64_t lambda = k - 1 - rhs / k;
    if (lambda < 0 || lambda > k - 1) continue;
    SrgParams p{v, k, lambda, mu};
    if (is_feasible(p)) out.push_back(p);
  }
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t v = g.order();
  Graph out(v);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      if (!g.adjacent(i, j)) out.add_edge(i, j);
    }
  }
  return out;
}

bool satisfies_srg_matrix_identity(const Graph& g, const SrgParams& p,
                                   std::span<const std::size_t> rows) {
  const std::size_t v = g.order();
  if (static_cast<std::int64_t>(v) != p.v) return false;
  std::vector<std::size_t> all;
  if (rows.empty()) {
    all.resize(v);
    std::iota(all.begin(), all.end(), std::size_t{0});
    rows = all;
  }
  // (A^2)_{ij} = sum_s A_is A_sj, computed as an explicit integer sum.
  std::vector<std::int64_t> square_row(v);
  for (std::size_t i : rows) {
    std::fill(square_row.begin(), square_row.end(), 0);
    for (std::size_t s = 0; s < v; ++s) {
      if (!g.adjacent(i, s)) continue;
      for (std::size_t j = 0; j < v; ++j) square_row[j] += g.adjacent(s, j) ? 1 : 0;
    }
    for (std::size_t j = 0; j < v; ++j) {
      std::int64_t expected = 0;
      if (i == j) {
        expected = p.k;
      } else if (g.adjacent(i, j)) {
        expected = p.lambda;
      } else {
        expected = p.mu;
      }
      if (square_row[j] != expected) return false;
    }
  }
  return true;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n && n >= 3; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph triangular_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  Graph g(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace srgforge

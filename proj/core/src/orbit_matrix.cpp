#include "srgforge/orbit_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace srgforge {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value) {
  if (value > INT64_MAX || value < INT64_MIN) throw std::overflow_error("orbit matrix arithmetic overflow");
  return static_cast<std::int64_t>(value);
}

/// Shared preconditions of both collapse variants. Returns the diagonal value.
std::int64_t check_uniform(const OrbitMatrix& m) {
  if (m.t() < 2) throw CollapseError("collapse needs at least two orbits");
  if (m.entries.size() != m.t()) throw CollapseError("entries do not match the number of orbits");
  for (std::int64_t n : m.lengths) {
    if (n != m.lengths.front()) throw CollapseError("orbit lengths are not all equal");
  }
  const std::int64_t d = m.entries[0][0];
  for (std::size_t i = 0; i < m.t(); ++i) {
    if (m.entries[i].size() != m.t()) throw CollapseError("entries do not match the number of orbits");
    if (m.entries[i][i] != d) throw CollapseError("diagonal is not constant");
  }
  return d;
}

Graph mapped_graph(const OrbitMatrix& m, std::int64_t one) {
  Graph g(m.t());
  for (std::size_t i = 0; i < m.t(); ++i) {
    for (std::size_t j = i + 1; j < m.t(); ++j) {
      if (m.entries[i][j] == one) g.add_edge(i, j);
    }
  }
  return g;
}

bool symmetric(const OrbitMatrix& m) {
  for (std::size_t i = 0; i < m.t(); ++i) {
    for (std::size_t j = i + 1; j < m.t(); ++j) {
      if (m.entries[i][j] != m.entries[j][i]) return false;
    }
  }
  return true;
}

CollapsePrediction predict(const OrbitMatrix& m, const CollapseSpec& s) {
  const SrgParams& p = m.params;
  const Wide t = static_cast<Wide>(m.t());
  const Wide x = s.x, y = s.y, d = s.d, n = s.n;
  CollapsePrediction out;
  out.t = narrow(t);
  // a x + (t - a - 1) y = k - d
  const Wide a_num = p.k - d - (t - 1) * y;
  if (a_num % (x - y) != 0) throw std::logic_error("collapse prediction: degree is not integral");
  const Wide a = a_num / (x - y);
  const Wide sq = (x - y) * (x - y);
  // 2dx + b x^2 + 2(a-b-1)xy + (t-2a+b)y^2 = mu n + (lambda - mu) x
  const Wide b_num = p.mu * n + (p.lambda - p.mu) * x - 2 * d * x - 2 * (a - 1) * x * y - (t - 2 * a) * y * y;
  // 2dy + c x^2 + 2(a-c)xy + (t-2a+c-2)y^2 = mu n + (lambda - mu) y
  const Wide c_num = p.mu * n + (p.lambda - p.mu) * y - 2 * d * y - 2 * a * x * y - (t - 2 * a - 2) * y * y;
  if (b_num % sq != 0 || c_num % sq != 0) {
    throw std::logic_error("collapse prediction: lambda or mu is not integral");
  }
  out.a = narrow(a);
  out.b = narrow(b_num / sq);
  out.c = narrow(c_num / sq);
  return out;
}

}  // namespace

std::vector<std::vector<Point>> orbit_partition(const Graph& g, const PermutationGroup& h) {
  if (h.degree() != g.order()) {
    throw InputError("group degree " + std::to_string(h.degree()) + " does not match graph order " +
                     std::to_string(g.order()));
  }
  for (std::size_t s = 0; s < h.generators().size(); ++s) {
    if (!g.is_automorphism(h.generators()[s])) {
      throw InputError("generator " + std::to_string(s + 1) + " is not an automorphism of the graph");
    }
  }
  auto orbits = h.orbits();
  for (auto& o : orbits) std::sort(o.begin(), o.end());
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

OrbitMatrix column_orbit_matrix(const Graph& g, const std::vector<std::vector<Point>>& partition) {
  auto params = is_strongly_regular(g);
  if (!params) throw InputError("column_orbit_matrix: graph is not strongly regular");
  const std::size_t v = g.order();
  std::vector<std::size_t> block(v, partition.size());
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw InputError("column_orbit_matrix: empty block");
    for (Point p : partition[b]) {
      if (p >= v || block[p] != partition.size()) {
        throw InputError("column_orbit_matrix: not a partition of the vertex set");
      }
      block[p] = b;
    }
  }
  if (std::find(block.begin(), block.end(), partition.size()) != block.end()) {
    throw InputError("column_orbit_matrix: partition does not cover every vertex");
  }

  const std::size_t t = partition.size();
  OrbitMatrix m;
  m.params = *params;
  m.entries.assign(t, std::vector<std::int64_t>(t, 0));
  for (const auto& b : partition) m.lengths.push_back(static_cast<std::int64_t>(b.size()));
  for (std::size_t j = 0; j < t; ++j) {
    std::vector<std::int64_t> first;
    for (std::size_t idx = 0; idx < partition[j].size(); ++idx) {
      std::vector<std::int64_t> counts(t, 0);
      for (std::size_t u : g.neighbours(partition[j][idx])) ++counts[block[u]];
      if (idx == 0) {
        first = counts;
      } else if (counts != first) {
        throw InputError("column_orbit_matrix: column sums differ inside block " + std::to_string(j + 1));
      }
    }
    for (std::size_t i = 0; i < t; ++i) m.entries[i][j] = first[i];
  }
  auto verdict = validate_orbit_matrix(m);
  if (!verdict.ok()) {
    const auto& f = verdict.violations.front();
    throw std::logic_error("column_orbit_matrix: built matrix violates " + to_string(f.check) + " at (" +
                           std::to_string(f.i + 1) + "," + std::to_string(f.j + 1) + ")");
  }
  return m;
}

std::string to_string(OrbitMatrixCheck check) {
  switch (check) {
    case OrbitMatrixCheck::Shape: return "shape";
    case OrbitMatrixCheck::ColumnSum: return "column-sum";
    case OrbitMatrixCheck::WeightedRowSum: return "weighted-row-sum";
    case OrbitMatrixCheck::Quadratic: return "quadratic";
  }
  return "unknown";
}

OrbitMatrixVerdict validate_orbit_matrix(const OrbitMatrix& m) {
  OrbitMatrixVerdict verdict;
  auto fail = [&](OrbitMatrixCheck c, std::size_t i, std::size_t j, Wide lhs, Wide rhs) {
    verdict.violations.push_back({c, i, j, narrow(lhs), narrow(rhs)});
  };
  const std::size_t t = m.t();
  const auto& p = m.params;
  if (t == 0 || m.entries.size() != t) {
    fail(OrbitMatrixCheck::Shape, 0, 0, static_cast<Wide>(m.entries.size()), static_cast<Wide>(t));
    return verdict;
  }
  Wide total = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (m.entries[i].size() != t) {
      fail(OrbitMatrixCheck::Shape, i, 0, static_cast<Wide>(m.entries[i].size()), static_cast<Wide>(t));
      return verdict;
    }
    if (m.lengths[i] <= 0) fail(OrbitMatrixCheck::Shape, i, i, m.lengths[i], 1);
    total += m.lengths[i];
  }
  if (total != p.v) fail(OrbitMatrixCheck::Shape, 0, 0, total, p.v);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      const std::int64_t c = m.entries[i][j];
      if (c < 0 || c > m.lengths[i]) fail(OrbitMatrixCheck::Shape, i, j, c, m.lengths[i]);
    }
  }
  if (!verdict.ok()) return verdict;

  for (std::size_t j = 0; j < t; ++j) {
    Wide sum = 0;
    for (std::size_t i = 0; i < t; ++i) sum += m.entries[i][j];
    if (sum != p.k) fail(OrbitMatrixCheck::ColumnSum, 0, j, sum, p.k);
  }
  for (std::size_t i = 0; i < t; ++i) {
    Wide sum = 0;
    for (std::size_t j = 0; j < t; ++j) sum += static_cast<Wide>(m.lengths[j]) * m.entries[i][j];
    const Wide rhs = static_cast<Wide>(p.k) * m.lengths[i];
    if (sum != rhs) fail(OrbitMatrixCheck::WeightedRowSum, i, 0, sum, rhs);
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      Wide lhs = 0;
      for (std::size_t s = 0; s < t; ++s) {
        lhs += static_cast<Wide>(m.lengths[s]) * m.entries[i][s] * m.entries[j][s];
      }
      const Wide inner = (i == j ? static_cast<Wide>(p.k - p.mu) : 0) + static_cast<Wide>(p.mu) * m.lengths[i] +
                         static_cast<Wide>(p.lambda - p.mu) * m.entries[i][j];
      const Wide rhs = static_cast<Wide>(m.lengths[j]) * inner;
      if (lhs != rhs) fail(OrbitMatrixCheck::Quadratic, i, j, lhs, rhs);
    }
  }
  return verdict;
}

std::vector<CollapseResult> collapse(const OrbitMatrix& m) {
  const std::int64_t d = check_uniform(m);
  if (!symmetric(m)) throw CollapseError("orbit matrix is not symmetric");
  std::set<std::int64_t> values;
  for (std::size_t i = 0; i < m.t(); ++i) {
    for (std::size_t j = 0; j < m.t(); ++j) {
      if (i != j) values.insert(m.entries[i][j]);
    }
  }
  if (values.size() != 2) {
    throw CollapseError("off-diagonal entries take " + std::to_string(values.size()) +
                        " values; collapse needs exactly two");
  }
  const std::int64_t lo = *values.begin();
  const std::int64_t hi = *values.rbegin();

  std::vector<CollapseResult> out;
  for (auto [x, y] : {std::pair{lo, hi}, std::pair{hi, lo}}) {
    CollapseResult r;
    r.spec = {x, y, d, m.lengths.front()};
    r.graph = mapped_graph(m, x);
    r.prediction = predict(m, r.spec);
    auto profile = regularity_profile(r.graph);
    if (!profile.regular || !profile.lambda || !profile.mu) {
      throw std::logic_error("collapse with x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                             " is not strongly regular");
    }
    r.params = {static_cast<std::int64_t>(m.t()), profile.k, *profile.lambda, *profile.mu};
    if (r.params != r.prediction.params()) {
      throw std::logic_error("collapse with x=" + std::to_string(x) + " gives " + r.params.to_string() +
                             ", predicted " + r.prediction.params().to_string());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GeneralizedCollapse> generalized_collapse(const OrbitMatrix& m) {
  check_uniform(m);
  std::set<std::int64_t> values;
  for (std::size_t i = 0; i < m.t(); ++i) {
    for (std::size_t j = 0; j < m.t(); ++j) {
      if (i != j) values.insert(m.entries[i][j]);
    }
  }
  std::vector<GeneralizedCollapse> out;
  for (std::int64_t w : values) {
    bool sym = true;
    for (std::size_t i = 0; i < m.t() && sym; ++i) {
      for (std::size_t j = 0; j < m.t(); ++j) {
        if ((m.entries[i][j] == w) != (m.entries[j][i] == w)) {
          sym = false;
          break;
        }
      }
    }
    if (!sym) continue;
    Graph g = mapped_graph(m, w);
    if (auto p = is_strongly_regular(g)) out.push_back({w, std::move(g), *p});
  }
  return out;
}

std::string format_orbit_matrix(const OrbitMatrix& m) {
  std::ostringstream out;
  out << m.t();
  for (auto n : m.lengths) out << ' ' << n;
  out << '\n' << m.params.v << ' ' << m.params.k << ' ' << m.params.lambda << ' ' << m.params.mu << '\n';
  for (const auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

OrbitMatrix parse_orbit_matrix(std::string_view text) {
  std::string cleaned;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    cleaned += line.substr(0, line.find('#'));
    cleaned += '\n';
  }
  std::istringstream in(cleaned);
  auto next = [&](const char* what) {
    std::int64_t value = 0;
    if (!(in >> value)) throw InputError(std::string("orbit matrix: expected ") + what);
    return value;
  };
  OrbitMatrix m;
  const std::int64_t t = next("orbit count");
  if (t <= 0 || t > 100000) throw InputError("orbit matrix: orbit count out of range");
  for (std::int64_t i = 0; i < t; ++i) m.lengths.push_back(next("orbit length"));
  m.params.v = next("v");
  m.params.k = next("k");
  m.params.lambda = next("lambda");
  m.params.mu = next("mu");
  m.entries.assign(static_cast<std::size_t>(t), std::vector<std::int64_t>(static_cast<std::size_t>(t), 0));
  for (auto& row : m.entries) {
    for (auto& c : row) c = next("matrix entry");
  }
  std::string extra;
  if (in >> extra) throw InputError("orbit matrix: trailing data '" + extra + "'");
  return m;
}

}  // namespace srgforge

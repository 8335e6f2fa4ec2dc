#include "srgforge/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "srgforge/cliques.hpp"

namespace srgforge {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
  x ^= x >> 30U;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27U;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31U;
  return h ^ x;
}

struct BudgetHit {};

}  // namespace

OrderedPartition::OrderedPartition(std::size_t n)
    : lab_(n), pos_(n), cell_(n, 0), len_(n, 0), cells_(n == 0 ? 0 : 1) {
  std::iota(lab_.begin(), lab_.end(), Point{0});
  std::iota(pos_.begin(), pos_.end(), std::uint32_t{0});
  if (n > 0) len_[0] = static_cast<std::uint32_t>(n);
}

std::vector<std::size_t> OrderedPartition::cell_starts() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < lab_.size(); s += len_[s]) out.push_back(s);
  return out;
}

std::size_t OrderedPartition::target_cell() const {
  std::size_t best = lab_.size();
  std::size_t best_len = lab_.size() + 1;
  for (std::size_t s = 0; s < lab_.size(); s += len_[s]) {
    if (len_[s] > 1 && len_[s] < best_len) {
      best = s;
      best_len = len_[s];
    }
  }
  return best;
}

std::vector<std::vector<Point>> OrderedPartition::cells() const {
  std::vector<std::vector<Point>> out;
  for (std::size_t s = 0; s < lab_.size(); s += len_[s]) {
    out.emplace_back(lab_.begin() + static_cast<std::ptrdiff_t>(s),
                     lab_.begin() + static_cast<std::ptrdiff_t>(s + len_[s]));
  }
  return out;
}

std::size_t OrderedPartition::individualize(Point v) {
  const std::size_t s = cell_[v];
  const std::size_t length = len_[s];
  if (length == 1) return s;
  const std::size_t p = pos_[v];
  const Point u = lab_[s];
  lab_[s] = v;
  lab_[p] = u;
  pos_[v] = static_cast<std::uint32_t>(s);
  pos_[u] = static_cast<std::uint32_t>(p);
  len_[s] = 1;
  len_[s + 1] = static_cast<std::uint32_t>(length - 1);
  for (std::size_t q = s + 1; q < s + length; ++q) cell_[lab_[q]] = static_cast<std::uint32_t>(s + 1);
  ++cells_;
  return s;
}

std::uint64_t OrderedPartition::refine(const Graph& g, std::vector<std::size_t> splitters) {
  const std::size_t n = lab_.size();
  std::uint64_t trace = mix(0x2545F4914F6CDD1DULL, cells_);
  std::vector<char> in_queue(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t s : splitters) {
    if (!in_queue[s]) {
      in_queue[s] = 1;
      queue.push_back(s);
    }
  }
  std::vector<std::uint64_t> splitter_bits(g.words_per_row());
  std::vector<std::pair<std::uint32_t, Point>> scratch;
  std::vector<std::uint32_t> counts(n);

  while (!queue.empty() && cells_ < n) {
    const std::size_t w = queue.front();
    queue.pop_front();
    in_queue[w] = 0;
    std::fill(splitter_bits.begin(), splitter_bits.end(), 0);
    for (std::size_t p = w; p < w + len_[w]; ++p) {
      splitter_bits[lab_[p] / 64] |= std::uint64_t{1} << (lab_[p] % 64);
    }
    trace = mix(trace, w);

    for (std::size_t s = 0; s < n;) {
      const std::size_t length = len_[s];
      if (length == 1) {
        ++s;
        continue;
      }
      bool uniform = true;
      for (std::size_t p = s; p < s + length; ++p) {
        counts[p] = static_cast<std::uint32_t>(popcount_and(g.row(lab_[p]), splitter_bits));
        uniform = uniform && counts[p] == counts[s];
      }
      if (uniform) {
        trace = mix(trace, (static_cast<std::uint64_t>(s) << 32U) | counts[s]);
        s += length;
        continue;
      }
      scratch.clear();
      for (std::size_t p = s; p < s + length; ++p) scratch.emplace_back(counts[p], lab_[p]);
      std::sort(scratch.begin(), scratch.end());
      for (std::size_t q = 0; q < length; ++q) {
        lab_[s + q] = scratch[q].second;
        pos_[scratch[q].second] = static_cast<std::uint32_t>(s + q);
      }
      const bool was_queued = in_queue[s] != 0;
      std::vector<std::pair<std::size_t, std::size_t>> pieces;  // (start, length)
      for (std::size_t q = 0; q < length;) {
        std::size_t r = q;
        while (r < length && scratch[r].first == scratch[q].first) ++r;
        const std::size_t start = s + q;
        len_[start] = static_cast<std::uint32_t>(r - q);
        for (std::size_t t = q; t < r; ++t) cell_[scratch[t].second] = static_cast<std::uint32_t>(start);
        pieces.emplace_back(start, r - q);
        trace = mix(trace, (static_cast<std::uint64_t>(start) << 40U) ^
                               (static_cast<std::uint64_t>(scratch[q].first) << 20U) ^ (r - q));
        q = r;
      }
      cells_ += pieces.size() - 1;
      std::size_t skip = n;  // piece start not to enqueue
      if (was_queued) {
        skip = s;
      } else {
        std::size_t largest = 0;
        for (const auto& [start, plen] : pieces) {
          if (plen > largest) {
            largest = plen;
            skip = start;
          }
        }
      }
      for (const auto& [start, plen] : pieces) {
        if (start == skip || in_queue[start]) continue;
        in_queue[start] = 1;
        queue.push_back(start);
      }
      s += length;
    }
  }
  trace = mix(trace, cells_);
  return trace;
}

std::vector<std::vector<Point>> equitable_partition(const Graph& g) {
  OrderedPartition p(g.order());
  if (g.order() > 0) p.refine(g, {0});
  return p.cells();
}

namespace {

/// First path of the search tree: partitions, traces and targets per level.
struct FirstPath {
  std::vector<OrderedPartition> nodes;
  std::vector<std::uint64_t> traces;
  std::vector<std::size_t> targets;
  std::vector<Point> base;

  explicit FirstPath(const Graph& g) {
    OrderedPartition root(g.order());
    traces.push_back(g.order() > 0 ? root.refine(g, {0}) : 0);
    nodes.push_back(std::move(root));
    while (!nodes.back().discrete()) {
      const OrderedPartition& last = nodes.back();
      std::size_t t = last.target_cell();
      Point b = last.at(t);
      for (std::size_t p = t; p < t + last.cell_length(t); ++p) b = std::min(b, last.at(p));
      OrderedPartition child = last;
      std::size_t s = child.individualize(b);
      traces.push_back(child.refine(g, {s}));
      targets.push_back(t);
      base.push_back(b);
      nodes.push_back(std::move(child));
    }
  }

  const std::vector<Point>& leaf() const { return nodes.back().lab(); }
  std::size_t depth() const { return base.size(); }
};

std::vector<Point> cell_vertices(const OrderedPartition& p, std::size_t start) {
  std::vector<Point> out(p.lab().begin() + static_cast<std::ptrdiff_t>(start),
                         p.lab().begin() + static_cast<std::ptrdiff_t>(start + p.cell_length(start)));
  std::sort(out.begin(), out.end());
  return out;
}

/// Leaf-to-leaf vertex map: reference leaf position p goes to other leaf position p.
Permutation leaf_map(const std::vector<Point>& reference, const std::vector<Point>& other) {
  std::vector<Point> images(reference.size());
  for (std::size_t p = 0; p < reference.size(); ++p) images[reference[p]] = other[p];
  return Permutation(std::move(images));
}

bool maps_onto(const Graph& a, const Graph& b, const Permutation& pi) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a.degree(i) != b.degree(pi[static_cast<Point>(i)])) return false;
    for (std::size_t j : a.neighbours(i)) {
      if (!b.adjacent(pi[static_cast<Point>(i)], pi[static_cast<Point>(j)])) return false;
    }
  }
  return true;
}

/// Depth-first search for a leaf in `target` (below `node` at `level`)
/// matching the reference first path of `source`.
class LeafMatcher {
 public:
  LeafMatcher(const Graph& source, const Graph& target, const FirstPath& path, std::uint64_t budget,
              std::uint64_t& nodes)
      : source_(source), target_(target), path_(path), budget_(budget), nodes_(nodes) {}

  std::optional<Permutation> descend(const OrderedPartition& node, std::size_t level) {
    if (node.discrete()) {
      Permutation pi = leaf_map(path_.leaf(), node.lab());
      if (maps_onto(source_, target_, pi)) return pi;
      return std::nullopt;
    }
    const std::size_t t = path_.targets[level];
    if (node.cell_length(t) != path_.nodes[level].cell_length(t)) return std::nullopt;
    for (Point u : cell_vertices(node, t)) {
      if (auto found = branch(node, u, level + 1)) return found;
    }
    return std::nullopt;
  }

  std::optional<Permutation> branch(const OrderedPartition& parent, Point u, std::size_t level) {
    if (++nodes_ > budget_) throw BudgetHit{};
    OrderedPartition child = parent;
    std::size_t s = child.individualize(u);
    std::uint64_t trace = child.refine(target_, {s});
    if (trace != path_.traces[level] || child.cell_count() != path_.nodes[level].cell_count()) {
      return std::nullopt;
    }
    return descend(child, level);
  }

 private:
  const Graph& source_;
  const Graph& target_;
  const FirstPath& path_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
};

}  // namespace

AutomorphismResult automorphism_group(const Graph& g, std::uint64_t node_budget) {
  const std::size_t n = g.order();
  AutomorphismResult result;
  if (n == 0) {
    result.group = PermutationGroup::trivial(0);
    result.complete = true;
    return result;
  }
  FirstPath path(g);
  std::vector<Permutation> generators;
  PermutationGroup known(n, {Permutation::identity(n)}, path.base);
  LeafMatcher matcher(g, g, path, node_budget, result.nodes);
  result.complete = true;
  try {
    for (std::size_t level = path.depth(); level-- > 0;) {
      for (Point w : cell_vertices(path.nodes[level], path.targets[level])) {
        if (w == path.base[level] || known.transversal(level, w) != nullptr) continue;
        if (auto found = matcher.branch(path.nodes[level], w, level + 1)) {
          generators.push_back(std::move(*found));
          known = PermutationGroup(n, generators, path.base);
        }
      }
    }
  } catch (const BudgetHit&) {
    result.complete = false;
  }
  if (generators.empty()) generators.push_back(Permutation::identity(n));
  result.group = PermutationGroup(n, std::move(generators), path.base);
  return result;
}

IsomorphismResult find_isomorphism(const Graph& a, const Graph& b, std::uint64_t node_budget) {
  IsomorphismResult result;
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return result;
  if (a.order() == 0) {
    result.isomorphic = true;
    result.mapping = Permutation::identity(0);
    return result;
  }
  if (invariant_fingerprint(a) != invariant_fingerprint(b)) return result;
  FirstPath path(a);
  OrderedPartition root(b.order());
  if (root.refine(b, {0}) != path.traces[0] || root.cell_count() != path.nodes[0].cell_count()) {
    return result;
  }
  LeafMatcher matcher(a, b, path, node_budget, result.nodes);
  try {
    if (auto found = matcher.descend(root, 0)) {
      result.isomorphic = true;
      result.mapping = std::move(found);
    }
  } catch (const BudgetHit&) {
    throw BoundExceeded("isomorphism search exceeded node budget " + std::to_string(node_budget));
  }
  return result;
}

bool are_isomorphic(const Graph& a, const Graph& b, std::uint64_t node_budget) {
  return find_isomorphism(a, b, node_budget).isomorphic;
}

std::uint64_t invariant_fingerprint(const Graph& g) {
  const std::size_t n = g.order();
  std::uint64_t h = mix(0xC0FFEEULL, n);
  std::vector<std::size_t> degrees(n);
  for (std::size_t i = 0; i < n; ++i) degrees[i] = g.degree(i);
  std::sort(degrees.begin(), degrees.end());
  for (auto d : degrees) h = mix(h, d);

  // (adjacent, |common|, edges inside the common neighbourhood) histogram.
  std::map<std::tuple<bool, std::size_t, std::size_t>, std::uint64_t> pair_stats;
  std::vector<std::uint64_t> common(g.words_per_row());
  for (std::size_t i = 0; i < n; ++i) {
    auto ri = g.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto rj = g.row(j);
      std::size_t size = 0;
      for (std::size_t w = 0; w < common.size(); ++w) {
        common[w] = ri[w] & rj[w];
        size += static_cast<std::size_t>(std::popcount(common[w]));
      }
      std::size_t inner = 0;
      for (std::size_t w = 0; w < common.size(); ++w) {
        for (std::uint64_t bits = common[w]; bits != 0; bits &= bits - 1) {
          std::size_t x = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          inner += popcount_and(g.row(x), common);
        }
      }
      ++pair_stats[{g.adjacent(i, j), size, inner / 2}];
    }
  }
  for (const auto& [key, count] : pair_stats) {
    h = mix(h, std::get<0>(key) ? 1 : 2);
    h = mix(h, std::get<1>(key));
    h = mix(h, std::get<2>(key));
    h = mix(h, count);
  }
  if (n == 0) return h;
  // K5 count; K4 and below are already fixed by the pair statistics.
  h = mix(h, count_cliques(g, 5, 1));
  OrderedPartition root(n);
  h = mix(h, root.refine(g, {0}));

  // Multiset of traces after individualizing each vertex of the target cell.
  const std::size_t target = root.target_cell();
  if (target < n) {
    std::vector<std::uint64_t> traces;
    for (std::size_t p = target; p < target + root.cell_length(target); ++p) {
      OrderedPartition child = root;
      const std::size_t single = child.individualize(root.at(p));
      traces.push_back(mix(child.refine(g, {single}), child.cell_count()));
    }
    std::sort(traces.begin(), traces.end());
    for (auto t : traces) h = mix(h, t);
  }
  return h;
}

}  // namespace srgforge

#include "srgforge/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "srgforge/parallel.hpp"

namespace srgforge {

std::vector<std::size_t> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  for (std::size_t i = 0; i < n; ++i) degree[i] = g.degree(i);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!removed[i] && (best == n || degree[i] < degree[best])) best = i;
    }
    removed[best] = true;
    order.push_back(best);
    for (std::size_t j : g.neighbours(best)) {
      if (!removed[j]) --degree[j];
    }
  }
  return order;
}

namespace {

/// Induced subgraph on a vertex list, with rows of local bits.
class LocalGraph {
 public:
  LocalGraph(const Graph& g, const std::vector<std::size_t>& vertices)
      : n_(vertices.size()), words_((vertices.size() + 63) / 64), rows_(n_ * words_, 0) {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (g.adjacent(vertices[a], vertices[b])) {
          rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
          rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        }
      }
    }
  }

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  const std::uint64_t* row(std::size_t i) const { return rows_.data() + i * words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

std::size_t popcount_words(const std::uint64_t* bits, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(bits[w]));
  return total;
}

/// Greedy colouring bound: a clique in `candidates` has at most this many
/// vertices.
std::size_t colour_bound(const LocalGraph& lg, const std::uint64_t* candidates, std::size_t need,
                         std::vector<std::uint64_t>& scratch) {
  const std::size_t words = lg.words();
  scratch.assign(2 * words, 0);
  std::uint64_t* uncoloured = scratch.data();
  std::uint64_t* available = scratch.data() + words;
  std::copy(candidates, candidates + words, uncoloured);
  std::size_t colours = 0;
  while (popcount_words(uncoloured, words) > 0) {
    ++colours;
    if (colours >= need) return colours;
    std::copy(uncoloured, uncoloured + words, available);
    for (std::size_t w = 0; w < words; ++w) {
      while (available[w] != 0) {
        std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(available[w]));
        available[w] &= available[w] - 1;
        uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
        const std::uint64_t* r = lg.row(v);
        for (std::size_t x = w; x < words; ++x) available[x] &= ~r[x];
      }
    }
  }
  return colours;
}

/// Cliques of `need` vertices inside `candidates`; each counted once by
/// extending only with vertices of higher local index.
std::uint64_t count_in(const LocalGraph& lg, const std::uint64_t* candidates, std::size_t need,
                       std::vector<std::vector<std::uint64_t>>& stack, std::size_t depth,
                       std::vector<std::uint64_t>& scratch) {
  const std::size_t words = lg.words();
  std::size_t available = popcount_words(candidates, words);
  if (need == 0) return 1;
  if (available < need) return 0;
  if (need == 1) return available;
  if (need >= 4 && colour_bound(lg, candidates, need, scratch) < need) return 0;

  if (stack.size() <= depth) stack.emplace_back(2 * words);
  std::uint64_t* rest = stack[depth].data();
  std::uint64_t* next = stack[depth].data() + words;
  std::copy(candidates, candidates + words, rest);
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < words; ++w) {
    while (rest[w] != 0) {
      std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(rest[w]));
      rest[w] &= rest[w] - 1;
      if (--available < need - 1) return total;
      const std::uint64_t* r = lg.row(v);
      if (need == 2) {
        for (std::size_t x = 0; x < words; ++x) total += static_cast<std::uint64_t>(std::popcount(rest[x] & r[x]));
        continue;
      }
      for (std::size_t x = 0; x < words; ++x) next[x] = rest[x] & r[x];
      total += count_in(lg, next, need - 1, stack, depth + 1, scratch);
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_cliques(const Graph& g, std::size_t size, unsigned threads) {
  if (size == 0) throw InputError("clique size must be at least 1");
  const std::size_t n = g.order();
  if (size == 1) return n;
  auto order = degeneracy_order(g);
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::atomic<std::uint64_t> total{0};
  parallel_for(n, worker_count(threads), [&](std::size_t idx) {
    const std::size_t v = order[idx];
    std::vector<std::size_t> later;
    for (std::size_t u : g.neighbours(v)) {
      if (rank[u] > rank[v]) later.push_back(u);
    }
    if (later.size() < size - 1) return;
    LocalGraph lg(g, later);
    std::vector<std::uint64_t> all(lg.words(), 0);
    for (std::size_t i = 0; i < lg.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    std::vector<std::vector<std::uint64_t>> stack;
    stack.reserve(size);  // frames hold raw pointers into earlier entries
    std::vector<std::uint64_t> scratch;
    total += count_in(lg, all.data(), size - 1, stack, 0, scratch);
  });
  return total.load();
}

}  // namespace srgforge

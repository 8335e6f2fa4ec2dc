#pragma once

#include <cstdint>

#include "srgforge/graph.hpp"

namespace srgforge {

/// Exact number of complete subgraphs on `size` vertices. Vertices are
/// processed in degeneracy order; each clique is counted once from its
/// earliest vertex, with candidate sets kept as bit rows. `threads` = 0 uses
/// the SRGFORGE_THREADS environment variable (default: hardware concurrency).
std::uint64_t count_cliques(const Graph& g, std::size_t size, unsigned threads = 0);

/// Vertex order produced by repeatedly removing a vertex of minimum degree.
std::vector<std::size_t> degeneracy_order(const Graph& g);

}  // namespace srgforge

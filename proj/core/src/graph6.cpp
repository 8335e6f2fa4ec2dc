#include "srgforge/graph6.hpp"

#include <fstream>
#include <sstream>

namespace srgforge {

namespace {

constexpr std::size_t kMaxShortSize = 62;
constexpr std::size_t kMaxMediumSize = 258047;

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= kMaxShortSize) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMaxMediumSize) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3F)));
    }
  } else {
    throw InputError("graph6: more than 258047 vertices not supported");
  }
  int filled = 0;
  unsigned chunk = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1U) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << static_cast<unsigned>(6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("graph6: character outside the printable range");
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4) throw InputError("graph6: truncated size header");
    if (text[1] == '~') throw InputError("graph6: 8-byte size header not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6U) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw InputError("graph6: body has " + std::to_string(text.size() - pos) + " characters, expected " +
                     std::to_string(expected));
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      auto c = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((c >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    auto last = static_cast<unsigned>(text.back() - 63);
    if ((last & ((1U << (6 - bits % 6)) - 1U)) != 0) throw InputError("graph6: nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

std::string adjacency_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) out << (g.adjacent(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

Graph parse_adjacency_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n)) throw InputError("adjacency text: missing vertex count");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string rowtext;
    if (!(in >> rowtext) || rowtext.size() != n) throw InputError("adjacency text: bad row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (rowtext[j] != '0' && rowtext[j] != '1') throw InputError("adjacency text: expected 0/1");
      bool bit = rowtext[j] == '1';
      if (i == j && bit) throw InputError("adjacency text: loop at vertex " + std::to_string(i));
      if (j < i && bit != g.adjacent(i, j)) throw InputError("adjacency text: matrix not symmetric");
      if (j > i && bit) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace srgforge

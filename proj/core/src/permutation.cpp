#include "srgforge/permutation.hpp"

#include <numeric>
#include <sstream>

namespace srgforge {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InputError("permutation images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t value = 0;
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (pos == start) throw InputError("unexpected character in cycle notation: " + std::string(text));
      if (value == 0 || value > degree) {
        throw InputError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      Point p = static_cast<Point>(value - 1);
      if (used[p]) throw InputError("cycles are not disjoint: " + std::string(text));
      used[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InputError("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  auto pi = p.images();
  auto qi = q.images();
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = qi[pi[i]];
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation power(const Permutation& p, std::int64_t e) {
  Permutation base = e < 0 ? p.inverse() : p;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation result = Permutation::identity(p.degree());
  while (n > 0) {
    if (n & 1U) result = compose(result, base);
    base = compose(base, base);
    n >>= 1U;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace srgforge

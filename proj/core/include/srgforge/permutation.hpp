#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srgforge {

using Point = std::uint32_t;

/// Raised for malformed or inconsistent input (degree mismatch, bad cycle
/// notation, points out of range, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bijection of {0, ..., degree-1}. Points are 0-based in memory and
/// 1-based in cycle notation. Groups act on the right: the image of point i
/// under p is written i^p and products compose left to right, so
/// (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Wraps images that the caller guarantees to be a bijection.
  static Permutation from_images_unchecked(std::vector<Point> images);

  /// Parses disjoint-cycle notation such as "(1,2,3)(4,5)". Whitespace is
  /// ignored and "()" denotes the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  Point image(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  /// Smallest point not fixed, or degree() for the identity.
  Point first_moved() const;
  Permutation inverse() const;
  /// Order of the cyclic group generated by this permutation.
  std::uint64_t order() const;
  /// True for products of an even number of transpositions.
  bool is_even() const;

  /// 1-based disjoint-cycle notation; the identity prints as "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Left-to-right product: the result maps i to q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// p^e for any integer e (negative exponents use the inverse).
Permutation power(const Permutation& p, std::int64_t e);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace srgforge

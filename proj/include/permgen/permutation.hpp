#pragma once

// Permutations of {0, ..., n-1} stored as image tables.
//
// Action is on the right: x^(ab) = (x^a)^b, so `a * b` applies a first. All
// I/O (cycle notation, reports) is 1-based; the image table is 0-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permgen/bigint.hpp"

namespace permgen {

using Point = std::uint32_t;

class Permutation {
 public:
  /// The identity on zero points.
  Permutation() = default;

  /// The identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Takes 0-based images and checks that they form a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// Same, without the bijection check. Caller guarantees validity.
  static Permutation from_images_unchecked(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  /// Smallest point moved, or degree() for the identity.
  std::size_t first_moved_point() const noexcept;

  Permutation inverse() const;
  /// this := this * rhs.
  Permutation& operator*=(const Permutation& rhs);

  /// Image of the point under this^-1; linear scan, for rare use.
  Point preimage(Point x) const noexcept;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) noexcept;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// a then b. Throws DegreeMismatch when degrees differ.
Permutation compose(const Permutation& a, const Permutation& b);
/// a then c then b, one pass.
Permutation compose3(const Permutation& a, const Permutation& c, const Permutation& b);
Permutation inverse(const Permutation& a);
/// g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);
/// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);
/// a^e for e >= 0.
Permutation power(const Permutation& a, std::uint64_t e);
/// lcm of the cycle lengths.
BigInt element_order(const Permutation& a);

/// Disjoint cycles of length >= 2, each starting at its smallest point.
std::vector<std::vector<Point>> cycles(const Permutation& a);

/// Parses cycle notation such as "(1 2 3)(4 5)" on `degree` points; points
/// are 1-based. Cycles are multiplied left to right. "()" and "" give the
/// identity. Errors: PointOutOfRange, RepeatedPointInCycle, SyntaxError,
/// all carrying the offending offset.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Disjoint cycle notation, 1-based; "()" for the identity.
std::string print_cycles(const Permutation& a);

/// Copy of `a` acting on `degree >= a.degree()` points, fixing the new ones.
Permutation extend(const Permutation& a, std::size_t degree);
/// Copy of `a` relabelled by +shift on a degree of `degree` points.
Permutation shift(const Permutation& a, std::size_t shift, std::size_t degree);
/// Restriction to the first `degree` points, which must be invariant.
Permutation restrict_prefix(const Permutation& a, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace permgen

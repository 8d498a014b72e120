#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace porigami {

using Point = std::uint32_t;

/// A bijection of {1..degree}.
///
/// Products are read left to right: (p * q)(i) == q(p(i)), so the left
/// factor acts first. Every public contract uses 1-based points; images are
/// stored 0-based.
class Permutation {
 public:
  /// Identity of degree 0.
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Builds from 1-based images; throws InputError if not a bijection.
  static Permutation from_images(std::span<const Point> images);

  /// Builds from disjoint 1-based cycles. Points above the largest point in
  /// `cycles` are fixed; `degree` of 0 means "largest point mentioned".
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles,
                                 std::size_t degree = 0);

  /// Parses cycle notation such as "(1,2)(3,4,5)" or "()".
  /// Throws ParseError on malformed text or non-disjoint cycles, InputError
  /// when a point exceeds a nonzero `degree`.
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }

  /// Image of a 1-based point.
  Point operator()(Point point) const { return images_[point - 1] + 1; }

  /// 0-based image, used by the inner loops of the group algorithms.
  Point image0(Point point0) const noexcept { return images_[point0]; }
  std::span<const Point> images0() const noexcept { return images_; }

  /// Left-to-right product; throws DegreeMismatch.
  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);

  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  bool is_identity() const noexcept;
  /// Smallest 1-based point moved, or 0 for the identity.
  Point first_moved_point() const noexcept;

  /// Least m >= 1 with p^m == id (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by it.
  std::vector<std::vector<Point>> cycles() const;
  std::vector<std::size_t> cycle_lengths() const;

  /// Canonical cycle notation; "()" for the identity.
  std::string to_string() const;

  /// Same permutation on a larger point set, fixing the new points.
  Permutation extended(std::size_t degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images0) : images_(std::move(images0)) {}

  std::vector<Point> images_;
};

/// x^-1 y^-1 x y.
Permutation commutator(const Permutation& x, const Permutation& y);

/// x^-1 g x.
Permutation conjugate(const Permutation& g, const Permutation& x);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace porigami

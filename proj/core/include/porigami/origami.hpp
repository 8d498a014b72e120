#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "porigami/group.hpp"

namespace porigami {

enum class Sl2Generator { kS, kT, kSInverse, kTInverse };

/// Normal origami (G, x, y): squares are the elements of G, the right
/// neighbour of g is g*x and the upper neighbour is g*y.
class Origami {
 public:
  const Group& group() const noexcept { return group_; }
  const Permutation& x() const noexcept { return x_; }
  const Permutation& y() const noexcept { return y_; }

 private:
  friend Origami make_origami(Group g, Permutation x, Permutation y);
  friend Origami sl2_act(Sl2Generator gen, const Origami& o);
  Origami(Group g, Permutation x, Permutation y)
      : group_(std::move(g)), x_(std::move(x)), y_(std::move(y)) {}

  Group group_;
  Permutation x_;
  Permutation y_;
};

/// Throws MembershipError if x or y is outside G, NotGeneratingPair if they
/// do not generate it.
Origami make_origami(Group g, Permutation x, Permutation y);

struct SingularityData {
  std::uint64_t multiplicity = 1;  // a = ord([x,y])
  std::uint64_t count = 0;         // |G| / a, or 0 on the torus
  std::uint64_t genus = 1;

  /// "H(0)" or "H(k x (a-1))".
  std::string stratum() const;
};

SingularityData singularity_data(const Origami& o);

enum class Direction { kHorizontal, kVertical };

struct Cylinder {
  std::uint64_t circumference;
  std::vector<std::size_t> squares;  // element indices in traversal order
};

struct CylinderDecomposition {
  Direction direction;
  std::vector<Cylinder> cylinders;  // ordered by smallest square index
};

CylinderDecomposition cylinder_decomposition(const Origami& o, Direction direction,
                                             std::size_t cap = kDefaultElementCap);

enum class Corner : std::uint8_t { kLowerLeft = 0, kLowerRight = 1, kUpperLeft = 2, kUpperRight = 3 };

/// Partition of the 4|G| corner slots; slot 4*g + corner.
struct VertexClasses {
  std::vector<std::uint32_t> class_of;  // class id per slot, numbered by first slot
  std::size_t count = 0;

  std::uint32_t at(std::size_t square, Corner c) const {
    return class_of[4 * square + static_cast<std::size_t>(c)];
  }
  std::vector<std::size_t> sizes() const;
};

VertexClasses vertex_classes(const Origami& o, std::size_t cap = kDefaultElementCap);

/// Both origamis must live on the same group realization. Throws
/// NotGeneratingPair, or InputError when the groups differ.
bool origami_equal(const Origami& a, const Origami& b, std::size_t cap = kDefaultElementCap);

/// S.(G,x,y) = (G,y^-1,x), T.(G,x,y) = (G,x,y x^-1).
Origami sl2_act(Sl2Generator gen, const Origami& o);

/// Orbit representatives in breadth-first discovery order over S, T, S^-1,
/// T^-1. Throws CapExceeded when more than max_size representatives appear.
std::vector<Origami> sl2_orbit(const Origami& o, std::size_t max_size,
                               std::size_t cap = kDefaultElementCap);

/// Labelling-invariant fingerprint: two origamis on one group have the same
/// key iff origami_equal holds.
std::vector<std::uint32_t> canonical_key(const Origami& o, std::size_t cap = kDefaultElementCap);

const char* to_string(Direction d);
const char* to_string(Sl2Generator g);

}  // namespace porigami

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "porigami/origami.hpp"

namespace porigami {

inline constexpr std::size_t kDefaultRenderCap = 1024;

struct Cell {
  int x;
  int y;
  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class Side : std::uint8_t { kRight, kTop, kLeft, kBottom };

/// Two square edges glued by translation but not drawn adjacent. The first
/// edge is the right (or top) edge of `square`, the second the left (or
/// bottom) edge of `neighbour`.
struct GluedPair {
  std::size_t mark;
  std::size_t square;
  std::size_t neighbour;
  bool vertical;  // top/bottom instead of right/left
};

struct Layout {
  std::vector<Cell> cells;           // per element index
  std::vector<std::string> labels;   // shortest positive word in x, y
  std::vector<std::pair<std::size_t, std::size_t>> adjacent_right;
  std::vector<std::pair<std::size_t, std::size_t>> adjacent_up;
  std::vector<GluedPair> glued;      // ordered by mark
  VertexClasses vertices;
  std::uint64_t multiplicity = 1;    // ord([x,y]); 1 draws neutral vertices
};

/// Breadth-first unfolding from the identity: right and upper neighbours go
/// to (+1,0) and (0,+1) when that cell is free. Squares left over start new
/// islands to the right. Throws CapExceeded above `cap` squares.
Layout layout_origami(const Origami& o, std::size_t cap = kDefaultRenderCap);

struct SvgStyle {
  int square_px = 48;
  /// "default" (hue wheel) or "mono" (gray ramp).
  std::string palette = "default";
};

/// SVG 1.1 document; identical inputs give identical bytes.
std::string emit_svg(const Layout& layout, const SvgStyle& style = {});

}  // namespace porigami

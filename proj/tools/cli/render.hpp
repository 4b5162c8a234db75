#pragma once

#include <string>
#include <vector>

#include "dyckdiv/words.hpp"

namespace dyckdiv::cli {

enum class RenderFormat { Ascii, Svg };

// a ↦ (+1, +1), b ↦ (+1, −1), c ↦ (+1, 0). Balanced words embed as TriWords.
struct RenderSpec {
  TriWord word;
  RenderFormat format = RenderFormat::Ascii;
  int cell_size = 20;  // SVG pixels per unit step
};

struct PathPoint {
  long x = 0;
  long y = 0;

  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

// Lattice points visited by the path of w, starting at (0, 0).
std::vector<PathPoint> path_points(const TriWord& w);

// Row-by-row profile using '/', '\' and '_'; one line per unit band, top
// first, trailing blanks trimmed, newline-terminated.
std::string render_ascii(const TriWord& w);

// Standalone SVG document holding a single polyline in unit coordinates.
std::string render_svg(const TriWord& w, int cell_size);

// Throws std::invalid_argument on an empty word or a non-positive cell size.
std::string render(const RenderSpec& spec);

}  // namespace dyckdiv::cli

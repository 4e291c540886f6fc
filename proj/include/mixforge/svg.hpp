#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixforge/geometry.hpp"

namespace mixforge {

/// Markers and colored arc ranges for render_svg. Arc ranges are half-open
/// parameter intervals [begin, end) on the path, drawn in a fixed palette
/// (K1..K4 order).
struct SvgAnnotations {
  std::optional<int> p, q, r, s;
  std::vector<std::array<int, 2>> arc_ranges;
};

/// Deterministic SVG 1.1 document: unit grid, oriented edges with
/// arrowheads, optional cut markers. Throws UnsupportedDimension unless the
/// path lives in Z^2.
std::string render_svg(const LatticePath& path,
                       const SvgAnnotations& annotations = {});

}  // namespace mixforge

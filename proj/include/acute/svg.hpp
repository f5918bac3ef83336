#pragma once

#include "acute/geometry.hpp"
#include "acute/partition.hpp"

#include <iosfwd>
#include <optional>
#include <span>

namespace acute {

/// 1000x1000 SVG 1.1: points, dashed partition lines (when a frame is
/// given), solid tour edges, and a circle around every obtuse vertex.
void write_svg(std::ostream& out, const PointSet& points, std::span<const std::size_t> order,
               const std::optional<OrthoFrame>& frame);

}  // namespace acute

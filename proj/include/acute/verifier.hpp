#pragma once

#include "acute/geometry.hpp"

#include <span>
#include <vector>

namespace acute {

struct Violation {
    std::size_t vertex;  // point index (verify_tour) or path position (verify_path)
    Angle angle;
};

struct VerificationReport {
    bool is_permutation = false;
    /// Exact verdict over all checked vertices. Only meaningful when
    /// is_permutation holds; a non-permutation is never acute.
    bool acute = false;
    std::vector<Violation> violations;
    Angle max_angle;
    std::size_t max_angle_vertex = 0;
};

/// Checks `order` as a closed tour over `points`: permutation first, then
/// the exact predicate at every cyclic triple.
/// Throws InvalidInput if the length differs from n, n < 3, or an index is
/// out of range.
VerificationReport verify_tour(const PointSet& points, std::span<const std::size_t> order);

/// Interior vertices only, no wraparound. Throws InvalidInput on repeated
/// points or fewer than two points.
VerificationReport verify_path(std::span<const Point> path);

}  // namespace acute

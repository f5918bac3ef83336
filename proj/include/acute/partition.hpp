#pragma once

#include "acute/geometry.hpp"

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace acute {

/// Quadrant labels are 1..4, counterclockwise from the (+,+) quadrant.
using Quadrant = int;

constexpr Quadrant opposite(Quadrant q) { return (q + 1) % 4 + 1; }

enum class FrameTransform { rotate90, rotate180, reflect_swap_12_34, reflect_swap_14_23 };

std::string_view to_string(FrameTransform kind);

/// Label a point carries after `kind` is applied to its frame.
Quadrant relabel(FrameTransform kind, Quadrant q);

/// Two orthogonal lines given by integer direction vectors. The origin is
/// kept implicitly through its doubled projections 2(origin.u) and
/// 2(origin.v), so frame coordinates stay exact integers even when a line
/// runs through the gap between two projections.
class OrthoFrame {
public:
    OrthoFrame() = default;
    OrthoFrame(Point u, Point v, Wide origin_u2, Wide origin_v2);

    Point u() const noexcept { return u_; }
    Point v() const noexcept { return v_; }
    Wide origin_u2() const noexcept { return origin_u2_; }
    Wide origin_v2() const noexcept { return origin_v2_; }

    /// Twice (p - origin).u and twice (p - origin).v.
    Wide x2(Point p) const { return 2 * dot(p, u_) - origin_u2_; }
    Wide y2(Point p) const { return 2 * dot(p, v_) - origin_v2_; }

    bool in_closed_quadrant(Point p, Quadrant q) const;

    /// Intersection of the two lines in input coordinates (approximate).
    std::array<double, 2> origin() const;

    OrthoFrame transformed(FrameTransform kind) const;

private:
    Point u_{1, 0};
    Point v_{0, 1};
    Wide origin_u2_ = 0;
    Wide origin_v2_ = 0;
};

struct EquitablePartition {
    OrthoFrame frame;
    std::vector<std::uint8_t> label;      // label[i] in 1..4
    std::array<std::size_t, 4> sizes{};  // sizes[q - 1] = |S_q|

    std::size_t size(Quadrant q) const { return sizes[static_cast<std::size_t>(q - 1)]; }

    /// Indices labeled q, in input order.
    std::vector<std::size_t> members(Quadrant q) const;
};

/// Splits `points` by two orthogonal lines into closed quadrants with sizes
/// (floor(n/4), ceil(n/4), floor(n/4), ceil(n/4)).
///
/// Bisects over the direction of the first line between 0 and 90 degrees.
/// At each probed direction both lines are placed at median positions;
/// points on a line may take either adjacent label, and a small max-flow
/// decides whether the target sizes are reachable. When a probe fails, the
/// count of a symbolically perturbed configuration tells which half to keep.
/// If floating-point bisection cannot resolve a jump, the remaining window
/// is searched over the exact pairwise-difference directions it contains.
///
/// Throws InvalidInput for odd n or n < 4.
EquitablePartition equitable_partition(const PointSet& points);

EquitablePartition frame_transform(const EquitablePartition& partition, FrameTransform kind);

/// Exact post-hoc check of membership and the size pattern. Accepts either
/// phase of the pattern, since a quarter turn swaps the floor/ceil pairs.
/// Throws InternalInvariant describing the first violation.
void check_partition(const PointSet& points, const EquitablePartition& partition);

}  // namespace acute

#pragma once

#include "acute/geometry.hpp"
#include "acute/partition.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace acute {

/// Ordered point indices; consecutive entries are distinct points.
using IndexPath = std::vector<std::size_t>;

enum class Convexity { convex, concave_acute, concave_obtuse };

std::string_view to_string(Convexity c);

enum class Hook : std::uint8_t {
    upward = 1,     // p2 p4 p3 p1
    downward = 2,   // p3 p1 p2 p4
    leftward = 4,   // p2 p4 p1 p3
    rightward = 8,  // p1 p3 p2 p4
};

std::string_view to_string(Hook h);

/// Defining path of a hook, as 1-based quadrant labels.
std::array<Quadrant, 4> hook_path(Hook h);

class HookSet {
public:
    constexpr HookSet() = default;

    constexpr void insert(Hook h) { bits_ |= static_cast<std::uint8_t>(h); }
    constexpr bool contains(Hook h) const { return (bits_ & static_cast<std::uint8_t>(h)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool vertical() const { return contains(Hook::upward) || contains(Hook::downward); }
    constexpr bool horizontal() const {
        return contains(Hook::leftward) || contains(Hook::rightward);
    }

    friend constexpr bool operator==(HookSet, HookSet) = default;

    std::string to_string() const;

private:
    std::uint8_t bits_ = 0;
};

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

/// One point per quadrant. `point[q - 1]` carries label q.
struct Quadruple {
    std::array<Point, 4> point{};
    std::array<std::size_t, 4> index{kNoIndex, kNoIndex, kNoIndex, kNoIndex};
    Convexity convexity = Convexity::convex;
    Quadrant center = 0;  // 0 when convex
    HookSet types;

    const Point& at(Quadrant q) const { return point[static_cast<std::size_t>(q - 1)]; }
    std::size_t index_at(Quadrant q) const { return index[static_cast<std::size_t>(q - 1)]; }
};

/// Exact: every interior vertex passes nonobtuse_at. Paths of one or two
/// points are vacuously acute.
bool is_acute_path(std::span<const Point> path);
bool is_acute_path(const PointSet& points, std::span<const std::size_t> path);

/// Convexity, center and hook types of a quadruple whose i-th point lies in
/// closed quadrant i of `frame`. Hook types are the direct acuteness tests
/// of the four hook paths.
///
/// Throws PreconditionViolation if a point is outside its quadrant or points
/// coincide; InternalInvariant if no hook is acute.
Quadruple classify_quadruple(const std::array<Point, 4>& points, const OrthoFrame& frame);

/// As above, remembering which input points the quadruple came from.
Quadruple classify_quadruple(const PointSet& points, const std::array<std::size_t, 4>& index,
                             const OrthoFrame& frame);

/// Angle q-p-r where q and r share the closed quadrant opposite to one of
/// p's closed quadrants. Such an angle is never obtuse; the function returns
/// the exact predicate so callers can assert on it.
///
/// Throws PreconditionViolation if no such quadrant pairing exists.
bool opposite_quadrant_acute(Point p, Point q, Point r, const OrthoFrame& frame);

}  // namespace acute

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace acute {

using Coord = std::int64_t;
__extension__ typedef __int128 Wide;

/// Largest admissible |coordinate|. Differences stay below 2^51, so every
/// degree-2 expression (dot, cross) stays below 2^103 and fits in Wide.
inline constexpr Coord kMaxCoordinate = Coord{1} << 50;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

constexpr Wide dot(Point a, Point b) {
    return Wide{a.x} * b.x + Wide{a.y} * b.y;
}

constexpr Wide cross(Point a, Point b) {
    return Wide{a.x} * b.y - Wide{a.y} * b.x;
}

constexpr Wide squared_distance(Point a, Point b) {
    const Point d = a - b;
    return dot(d, d);
}

std::string to_string(Point p);

/// Input points with their original positions preserved. Tours and paths
/// refer to points by index into this set.
class PointSet {
public:
    PointSet() = default;

    /// Throws InvalidInput on duplicates or coordinates beyond kMaxCoordinate.
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

private:
    std::vector<Point> points_;
};

/// Rotation angle in radians, always within [0, pi]. Reporting only; no
/// acuteness decision is ever taken on this value.
class Angle {
public:
    constexpr Angle() = default;
    explicit Angle(double radians);

    constexpr double radians() const noexcept { return radians_; }

    friend constexpr auto operator<=>(const Angle&, const Angle&) = default;

private:
    double radians_ = 0.0;
};

enum class Orientation { counterclockwise, clockwise, collinear };

enum class TriangleLocation { strictly_inside, on_boundary, outside };

/// True iff the angle a-apex-b is at most pi/2. Exact.
bool nonobtuse_at(Point apex, Point a, Point b);

Orientation orientation(Point p, Point q, Point r);

/// Closed-triangle membership of s. Degenerate triangles yield on_boundary
/// (s on the hull segment) or outside.
TriangleLocation point_in_triangle(Point s, Point a, Point b, Point c);

Angle rotation_angle(Point prev, Point at, Point next);

/// `p` is to the left of `q` (x not larger); `below` likewise for y.
constexpr bool left_of(Point p, Point q) { return p.x <= q.x; }
constexpr bool below(Point p, Point q) { return p.y <= q.y; }

}  // namespace acute

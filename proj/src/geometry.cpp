#include "acute/geometry.hpp"

#include "acute/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace acute {

namespace {

int sign(Wide v) { return (v > 0) - (v < 0); }

void require_distinct(Point apex, Point a, Point b, const char* what) {
    if (a == apex || b == apex) {
        throw DegenerateInput(std::string(what) + ": neighbor coincides with apex " +
                              to_string(apex));
    }
}

}  // namespace

std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    for (const Point& p : points_) {
        if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
            p.y < -kMaxCoordinate) {
            throw InvalidInput("coordinate out of range: " + to_string(p));
        }
    }
    std::vector<Point> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw InvalidInput("duplicate point " + to_string(*dup));
    }
}

Angle::Angle(double radians) : radians_(radians) {
    if (!(radians >= 0.0 && radians <= std::numbers::pi)) {
        throw InvalidInput("angle outside [0, pi]: " + std::to_string(radians));
    }
}

bool nonobtuse_at(Point apex, Point a, Point b) {
    require_distinct(apex, a, b, "nonobtuse_at");
    return dot(a - apex, b - apex) >= 0;
}

Orientation orientation(Point p, Point q, Point r) {
    switch (sign(cross(q - p, r - p))) {
        case 1: return Orientation::counterclockwise;
        case -1: return Orientation::clockwise;
        default: return Orientation::collinear;
    }
}

TriangleLocation point_in_triangle(Point s, Point a, Point b, Point c) {
    const int area = sign(cross(b - a, c - a));
    if (area == 0) {
        // Degenerate: the closed triangle is the segment spanned by a, b, c.
        if (sign(cross(b - a, s - a)) != 0 || sign(cross(c - a, s - a)) != 0) {
            return TriangleLocation::outside;
        }
        const Coord lo_x = std::min({a.x, b.x, c.x});
        const Coord hi_x = std::max({a.x, b.x, c.x});
        const Coord lo_y = std::min({a.y, b.y, c.y});
        const Coord hi_y = std::max({a.y, b.y, c.y});
        const bool within = s.x >= lo_x && s.x <= hi_x && s.y >= lo_y && s.y <= hi_y;
        return within ? TriangleLocation::on_boundary : TriangleLocation::outside;
    }
    const int d1 = area * sign(cross(b - a, s - a));
    const int d2 = area * sign(cross(c - b, s - b));
    const int d3 = area * sign(cross(a - c, s - c));
    if (d1 < 0 || d2 < 0 || d3 < 0) {
        return TriangleLocation::outside;
    }
    if (d1 == 0 || d2 == 0 || d3 == 0) {
        return TriangleLocation::on_boundary;
    }
    return TriangleLocation::strictly_inside;
}

Angle rotation_angle(Point prev, Point at, Point next) {
    require_distinct(at, prev, next, "rotation_angle");
    const Point a = prev - at;
    const Point b = next - at;
    const double c = static_cast<double>(cross(a, b));
    const double d = static_cast<double>(dot(a, b));
    return Angle(std::atan2(std::abs(c), d));
}

}  // namespace acute

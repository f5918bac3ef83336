#include "acute/quadruple.hpp"

#include "acute/errors.hpp"

namespace acute {

namespace {

constexpr std::array kHooks{Hook::upward, Hook::downward, Hook::leftward, Hook::rightward};

}  // namespace

std::string_view to_string(Convexity c) {
    switch (c) {
        case Convexity::convex: return "convex";
        case Convexity::concave_acute: return "concave_acute";
        case Convexity::concave_obtuse: return "concave_obtuse";
    }
    return "unknown";
}

std::string_view to_string(Hook h) {
    switch (h) {
        case Hook::upward: return "upward";
        case Hook::downward: return "downward";
        case Hook::leftward: return "leftward";
        case Hook::rightward: return "rightward";
    }
    return "unknown";
}

std::array<Quadrant, 4> hook_path(Hook h) {
    switch (h) {
        case Hook::upward: return {2, 4, 3, 1};
        case Hook::downward: return {3, 1, 2, 4};
        case Hook::leftward: return {2, 4, 1, 3};
        case Hook::rightward: return {1, 3, 2, 4};
    }
    return {1, 2, 3, 4};
}

std::string HookSet::to_string() const {
    std::string out = "{";
    for (Hook h : kHooks) {
        if (!contains(h)) continue;
        if (out.size() > 1) out += ",";
        out += acute::to_string(h);
    }
    return out + "}";
}

bool is_acute_path(std::span<const Point> path) {
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        if (!nonobtuse_at(path[k], path[k - 1], path[k + 1])) return false;
    }
    return true;
}

bool is_acute_path(const PointSet& points, std::span<const std::size_t> path) {
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        if (!nonobtuse_at(points[path[k]], points[path[k - 1]], points[path[k + 1]])) return false;
    }
    return true;
}

Quadruple classify_quadruple(const std::array<Point, 4>& points, const OrthoFrame& frame) {
    for (Quadrant q = 1; q <= 4; ++q) {
        const Point& p = points[static_cast<std::size_t>(q - 1)];
        if (!frame.in_closed_quadrant(p, q)) {
            throw PreconditionViolation("quadruple point " + to_string(p) +
                                        " is not in closed quadrant " + std::to_string(q));
        }
        for (Quadrant r = q + 1; r <= 4; ++r) {
            if (p == points[static_cast<std::size_t>(r - 1)]) {
                throw PreconditionViolation("quadruple points coincide: " + to_string(p));
            }
        }
    }

    Quadruple out;
    out.point = points;

    // Lowest label wins when several points touch the others' triangle.
    for (std::size_t c = 0; c < 4 && out.center == 0; ++c) {
        std::array<Point, 3> rest{};
        for (std::size_t k = 0, r = 0; k < 4; ++k) {
            if (k != c) rest[r++] = points[k];
        }
        if (point_in_triangle(points[c], rest[0], rest[1], rest[2]) != TriangleLocation::outside) {
            out.center = static_cast<Quadrant>(c + 1);
            const Point s = points[c];
            const bool some_nonobtuse = nonobtuse_at(s, rest[0], rest[1]) ||
                                        nonobtuse_at(s, rest[1], rest[2]) ||
                                        nonobtuse_at(s, rest[2], rest[0]);
            out.convexity = some_nonobtuse ? Convexity::concave_acute : Convexity::concave_obtuse;
        }
    }

    for (Hook h : kHooks) {
        const auto labels = hook_path(h);
        std::array<Point, 4> path{};
        for (std::size_t k = 0; k < 4; ++k) path[k] = out.at(labels[k]);
        if (is_acute_path(path)) out.types.insert(h);
    }
    if (out.types.empty()) {
        throw InternalInvariant("quadruple has no acute hook: " + to_string(points[0]) + " " +
                                to_string(points[1]) + " " + to_string(points[2]) + " " +
                                to_string(points[3]));
    }
    return out;
}

Quadruple classify_quadruple(const PointSet& points, const std::array<std::size_t, 4>& index,
                             const OrthoFrame& frame) {
    std::array<Point, 4> pts{};
    for (std::size_t k = 0; k < 4; ++k) pts[k] = points[index[k]];
    Quadruple out = classify_quadruple(pts, frame);
    out.index = index;
    return out;
}

bool opposite_quadrant_acute(Point p, Point q, Point r, const OrthoFrame& frame) {
    for (Quadrant home = 1; home <= 4; ++home) {
        const Quadrant away = opposite(home);
        if (frame.in_closed_quadrant(p, home) && frame.in_closed_quadrant(q, away) &&
            frame.in_closed_quadrant(r, away)) {
            return nonobtuse_at(p, q, r);
        }
    }
    throw PreconditionViolation("opposite_quadrant_acute: " + to_string(q) + " and " +
                                to_string(r) + " are not opposite to " + to_string(p));
}

}  // namespace acute

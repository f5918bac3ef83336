#include "acute/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace acute {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 0.05;

class Viewport {
public:
    explicit Viewport(const PointSet& points) {
        double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
        if (!points.empty()) {
            min_x = max_x = static_cast<double>(points[0].x);
            min_y = max_y = static_cast<double>(points[0].y);
            for (const Point& p : points) {
                min_x = std::min(min_x, static_cast<double>(p.x));
                max_x = std::max(max_x, static_cast<double>(p.x));
                min_y = std::min(min_y, static_cast<double>(p.y));
                max_y = std::max(max_y, static_cast<double>(p.y));
            }
        }
        const double extent = std::max({max_x - min_x, max_y - min_y, 1.0});
        scale_ = kCanvas * (1 - 2 * kMargin) / extent;
        // Centre the bounding box on the canvas.
        cx_ = (min_x + max_x) / 2;
        cy_ = (min_y + max_y) / 2;
        diagonal_ = std::hypot(max_x - min_x, max_y - min_y) + extent;
    }

    double x(double wx) const { return kCanvas / 2 + (wx - cx_) * scale_; }
    double y(double wy) const { return kCanvas / 2 - (wy - cy_) * scale_; }
    double diagonal() const { return diagonal_; }

private:
    double scale_ = 1, cx_ = 0, cy_ = 0, diagonal_ = 1;
};

}  // namespace

void write_svg(std::ostream& out, const PointSet& points, std::span<const std::size_t> order,
               const std::optional<OrthoFrame>& frame) {
    const Viewport view(points);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" "
           "height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
        << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    if (frame) {
        const auto origin = frame->origin();
        out << "<g stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"8 6\">\n";
        for (Point dir : {frame->u(), frame->v()}) {
            const double len = std::hypot(static_cast<double>(dir.x), static_cast<double>(dir.y));
            const double dx = static_cast<double>(dir.x) / len * view.diagonal();
            const double dy = static_cast<double>(dir.y) / len * view.diagonal();
            out << "<line x1=\"" << view.x(origin[0] - dx) << "\" y1=\"" << view.y(origin[1] - dy)
                << "\" x2=\"" << view.x(origin[0] + dx) << "\" y2=\"" << view.y(origin[1] + dy)
                << "\"/>\n";
        }
        out << "</g>\n";
    }

    const std::size_t n = order.size();
    if (n >= 2) {
        out << "<polygon fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.2\" points=\"";
        for (std::size_t k = 0; k < n; ++k) {
            const Point& p = points[order[k]];
            out << (k ? " " : "") << view.x(static_cast<double>(p.x)) << ','
                << view.y(static_cast<double>(p.y));
        }
        out << "\"/>\n";
    }

    out << "<g fill=\"black\">\n";
    for (const Point& p : points) {
        out << "<circle cx=\"" << view.x(static_cast<double>(p.x)) << "\" cy=\""
            << view.y(static_cast<double>(p.y)) << "\" r=\"2.5\"/>\n";
    }
    out << "</g>\n";

    if (n >= 3) {
        out << "<g fill=\"none\" stroke=\"red\" stroke-width=\"2\">\n";
        for (std::size_t k = 0; k < n; ++k) {
            const Point& at = points[order[k]];
            if (!nonobtuse_at(at, points[order[(k + n - 1) % n]], points[order[(k + 1) % n]])) {
                out << "<circle cx=\"" << view.x(static_cast<double>(at.x)) << "\" cy=\""
                    << view.y(static_cast<double>(at.y)) << "\" r=\"9\"/>\n";
            }
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

}  // namespace acute

#include "acute/verifier.hpp"

#include "acute/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace acute {

namespace {

// Angles are ranked by cosine (cheap) and only converted for reporting.
class Scanner {
public:
    explicit Scanner(VerificationReport& report) : report_(report) {}

    void visit(std::size_t vertex, Point prev, Point at, Point next) {
        if (prev == at || next == at) {
            throw DegenerateInput("consecutive vertices coincide at " + to_string(at));
        }
        const Point a = prev - at;
        const Point b = next - at;
        const Wide d = dot(a, b);
        if (d < 0) {
            report_.violations.push_back({vertex, rotation_angle(prev, at, next)});
        }
        const double cosine = static_cast<double>(d) /
                              std::sqrt(static_cast<double>(dot(a, a)) * static_cast<double>(dot(b, b)));
        if (!seen_ || cosine < best_cosine_) {
            seen_ = true;
            best_cosine_ = cosine;
            report_.max_angle_vertex = vertex;
            worst_ = {prev, at, next};
        }
    }

    void finish() {
        if (seen_) report_.max_angle = rotation_angle(worst_[0], worst_[1], worst_[2]);
        report_.acute = report_.violations.empty();
    }

private:
    VerificationReport& report_;
    bool seen_ = false;
    double best_cosine_ = 2.0;
    std::array<Point, 3> worst_{};
};

}  // namespace

VerificationReport verify_tour(const PointSet& points, std::span<const std::size_t> order) {
    const std::size_t n = points.size();
    if (n < 3) {
        throw InvalidInput("a tour needs at least three points");
    }
    if (order.size() != n) {
        throw InvalidInput("tour has " + std::to_string(order.size()) + " entries for " +
                           std::to_string(n) + " points");
    }
    VerificationReport report;
    std::vector<std::uint8_t> seen(n, 0);
    report.is_permutation = true;
    for (std::size_t idx : order) {
        if (idx >= n) {
            throw InvalidInput("tour index " + std::to_string(idx) + " out of range");
        }
        if (seen[idx]++) report.is_permutation = false;
    }
    if (!report.is_permutation) {
        return report;
    }
    Scanner scan(report);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t prev = order[k == 0 ? n - 1 : k - 1];
        const std::size_t next = order[k + 1 == n ? 0 : k + 1];
        scan.visit(order[k], points[prev], points[order[k]], points[next]);
    }
    scan.finish();
    return report;
}

VerificationReport verify_path(std::span<const Point> path) {
    if (path.size() < 2) {
        throw InvalidInput("a path needs at least two points");
    }
    std::vector<Point> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("path visits a point twice");
    }
    VerificationReport report;
    report.is_permutation = true;
    Scanner scan(report);
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        scan.visit(k, path[k - 1], path[k], path[k + 1]);
    }
    scan.finish();
    return report;
}

}  // namespace acute

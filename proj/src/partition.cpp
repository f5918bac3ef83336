#include "acute/partition.hpp"

#include "acute/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>

namespace acute {

namespace {

int sign(Wide v) { return (v > 0) - (v < 0); }

Point perp(Point u) { return {-u.y, u.x}; }

// Sign pattern of a quadrant: Q1 (+,+), Q2 (-,+), Q3 (-,-), Q4 (+,-).
constexpr std::array<std::array<int, 2>, 4> kQuadrantSigns{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};

bool compatible(int sx, int sy, Quadrant q) {
    const auto [qx, qy] = kQuadrantSigns[static_cast<std::size_t>(q - 1)];
    return sx * qx >= 0 && sy * qy >= 0;
}

int class_of(int sx, int sy) { return (sx + 1) * 3 + (sy + 1); }

using Allocation = std::array<std::array<std::int64_t, 4>, 9>;

// Max-flow from the nine sign classes to the four labels. Returns how many
// points of each class go to each label when every label count can be met.
std::optional<Allocation> allocate_labels(const std::array<std::int64_t, 9>& class_count,
                                          const std::array<std::int64_t, 4>& target) {
    constexpr int kSource = 0;
    constexpr int kSink = 14;
    constexpr int kNodes = 15;
    std::array<std::array<std::int64_t, kNodes>, kNodes> cap{};
    constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;
    for (int c = 0; c < 9; ++c) {
        cap[kSource][1 + c] = class_count[static_cast<std::size_t>(c)];
        const int sx = c / 3 - 1;
        const int sy = c % 3 - 1;
        for (Quadrant q = 1; q <= 4; ++q) {
            if (compatible(sx, sy, q)) {
                cap[1 + c][9 + q] = kUnbounded;
            }
        }
    }
    for (Quadrant q = 1; q <= 4; ++q) {
        cap[9 + q][kSink] = target[static_cast<std::size_t>(q - 1)];
    }
    const auto original = cap;

    std::int64_t total = 0;
    for (;;) {
        std::array<int, kNodes> parent;
        parent.fill(-1);
        parent[kSource] = kSource;
        std::queue<int> frontier;
        frontier.push(kSource);
        while (!frontier.empty() && parent[kSink] < 0) {
            const int at = frontier.front();
            frontier.pop();
            for (int next = 0; next < kNodes; ++next) {
                if (parent[next] < 0 && cap[at][next] > 0) {
                    parent[next] = at;
                    frontier.push(next);
                }
            }
        }
        if (parent[kSink] < 0) {
            break;
        }
        std::int64_t push = kUnbounded;
        for (int at = kSink; at != kSource; at = parent[at]) {
            push = std::min(push, cap[parent[at]][at]);
        }
        for (int at = kSink; at != kSource; at = parent[at]) {
            cap[parent[at]][at] -= push;
            cap[at][parent[at]] += push;
        }
        total += push;
    }

    std::int64_t needed = 0;
    for (auto t : target) needed += t;
    if (total != needed) {
        return std::nullopt;
    }
    Allocation flow{};
    for (int c = 0; c < 9; ++c) {
        for (Quadrant q = 1; q <= 4; ++q) {
            const std::int64_t used = original[1 + c][9 + q] - cap[1 + c][9 + q];
            flow[static_cast<std::size_t>(c)][static_cast<std::size_t>(q - 1)] =
                std::max<std::int64_t>(used, 0);
        }
    }
    return flow;
}

struct Probe {
    std::optional<EquitablePartition> partition;
    // Count in quadrant 1 after an infinitesimal counterclockwise turn of u.
    std::int64_t perturbed_q1 = 0;
};

class Sweep {
public:
    explicit Sweep(const PointSet& points)
        : points_(points), n_(points.size()), s_(n_), t_(n_), buffer_(n_), order_(n_) {
        floor_ = static_cast<std::int64_t>(n_ / 4);
        ceil_ = static_cast<std::int64_t>((n_ + 3) / 4);
    }

    std::int64_t target() const { return floor_; }

    Probe probe(Point u) {
        const Point v = perp(u);
        for (std::size_t i = 0; i < n_; ++i) {
            s_[i] = dot(points_[i], u);
            t_[i] = dot(points_[i], v);
        }
        const OrthoFrame frame(u, v, median_pair_sum(s_), median_pair_sum(t_));

        std::array<std::int64_t, 9> class_count{};
        std::vector<std::uint8_t> cls(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const int c = class_of(sign(frame.x2(points_[i])), sign(frame.y2(points_[i])));
            cls[i] = static_cast<std::uint8_t>(c);
            ++class_count[static_cast<std::size_t>(c)];
        }

        Probe result;
        if (auto alloc = allocate_labels(class_count, {floor_, ceil_, floor_, ceil_})) {
            EquitablePartition part;
            part.frame = frame;
            part.label.resize(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                auto& row = (*alloc)[cls[i]];
                Quadrant q = 1;
                while (row[static_cast<std::size_t>(q - 1)] == 0) ++q;
                --row[static_cast<std::size_t>(q - 1)];
                part.label[i] = static_cast<std::uint8_t>(q);
                ++part.sizes[static_cast<std::size_t>(q - 1)];
            }
            result.partition = std::move(part);
            return result;
        }

        // Perturbing u to u + eps*v breaks s-ties by t and t-ties by -s.
        const std::size_t half = n_ / 2;
        std::vector<std::uint8_t> right(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
        std::nth_element(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(half),
                         order_.end(), [&](std::size_t a, std::size_t b) {
                             return s_[a] != s_[b] ? s_[a] < s_[b] : t_[a] < t_[b];
                         });
        for (std::size_t k = half; k < n_; ++k) right[order_[k]] = 1;
        for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
        std::nth_element(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(half),
                         order_.end(), [&](std::size_t a, std::size_t b) {
                             return t_[a] != t_[b] ? t_[a] < t_[b] : s_[a] > s_[b];
                         });
        std::int64_t q1 = 0;
        for (std::size_t k = half; k < n_; ++k) q1 += right[order_[k]];
        result.perturbed_q1 = q1;
        return result;
    }

private:
    // Sum of the (n/2)-th and (n/2 + 1)-th smallest values: twice the
    // position of the halving line.
    Wide median_pair_sum(const std::vector<Wide>& values) {
        buffer_ = values;
        const auto mid = buffer_.begin() + static_cast<std::ptrdiff_t>(n_ / 2 - 1);
        std::nth_element(buffer_.begin(), mid, buffer_.end());
        const Wide lower = *mid;
        const Wide upper = *std::min_element(mid + 1, buffer_.end());
        return lower + upper;
    }

    const PointSet& points_;
    std::size_t n_;
    std::int64_t floor_ = 0;
    std::int64_t ceil_ = 0;
    std::vector<Wide> s_, t_, buffer_;
    std::vector<std::size_t> order_;
};

// Strictly inside the open angular window (lo, hi); both within a quarter turn.
bool strictly_between(Point lo, Point d, Point hi) { return cross(lo, d) > 0 && cross(d, hi) > 0; }

std::optional<Point> angular_midpoint(Point lo, Point hi) {
    const double a = std::atan2(static_cast<double>(lo.y), static_cast<double>(lo.x));
    const double b = std::atan2(static_cast<double>(hi.y), static_cast<double>(hi.x));
    const double m = 0.5 * (a + b);
    const Point u{std::llround(std::ldexp(std::cos(m), 52)), std::llround(std::ldexp(std::sin(m), 52))};
    if (!strictly_between(lo, u, hi)) {
        return std::nullopt;
    }
    return u;
}

// Rotates a nonzero vector by quarter turns into the half-open quarter
// [base, perp(base)).
Point into_window(Point d, Point base) {
    while (!(dot(d, base) > 0 && cross(base, d) >= 0)) d = perp(d);
    return d;
}

// Fixed direction about 0.3 rad off the x-axis with 52-bit components.
Point generic_direction() {
    return {std::llround(std::ldexp(std::cos(0.3), 52)), std::llround(std::ldexp(std::sin(0.3), 52))};
}

}  // namespace

std::string_view to_string(FrameTransform kind) {
    switch (kind) {
        case FrameTransform::rotate90: return "rotate90";
        case FrameTransform::rotate180: return "rotate180";
        case FrameTransform::reflect_swap_12_34: return "reflect_swap_12_34";
        case FrameTransform::reflect_swap_14_23: return "reflect_swap_14_23";
    }
    return "unknown";
}

Quadrant relabel(FrameTransform kind, Quadrant q) {
    switch (kind) {
        case FrameTransform::rotate90: return q == 1 ? 4 : q - 1;
        case FrameTransform::rotate180: return opposite(q);
        case FrameTransform::reflect_swap_12_34: return std::array{2, 1, 4, 3}[static_cast<std::size_t>(q - 1)];
        case FrameTransform::reflect_swap_14_23: return std::array{4, 3, 2, 1}[static_cast<std::size_t>(q - 1)];
    }
    return q;
}

OrthoFrame::OrthoFrame(Point u, Point v, Wide origin_u2, Wide origin_v2)
    : u_(u), v_(v), origin_u2_(origin_u2), origin_v2_(origin_v2) {
    if (u == Point{} || v == Point{} || dot(u, v) != 0) {
        throw PreconditionViolation("frame directions must be nonzero and orthogonal");
    }
}

bool OrthoFrame::in_closed_quadrant(Point p, Quadrant q) const {
    return compatible(sign(x2(p)), sign(y2(p)), q);
}

std::array<double, 2> OrthoFrame::origin() const {
    const long double uu = static_cast<long double>(dot(u_, u_));
    const long double vv = static_cast<long double>(dot(v_, v_));
    const long double a = static_cast<long double>(origin_u2_) / (2 * uu);
    const long double b = static_cast<long double>(origin_v2_) / (2 * vv);
    return {static_cast<double>(a * u_.x + b * v_.x), static_cast<double>(a * u_.y + b * v_.y)};
}

OrthoFrame OrthoFrame::transformed(FrameTransform kind) const {
    const Point nu{-u_.x, -u_.y};
    const Point nv{-v_.x, -v_.y};
    switch (kind) {
        case FrameTransform::rotate90: return {v_, nu, origin_v2_, -origin_u2_};
        case FrameTransform::rotate180: return {nu, nv, -origin_u2_, -origin_v2_};
        case FrameTransform::reflect_swap_12_34: return {nu, v_, -origin_u2_, origin_v2_};
        case FrameTransform::reflect_swap_14_23: return {u_, nv, origin_u2_, -origin_v2_};
    }
    return *this;
}

std::vector<std::size_t> EquitablePartition::members(Quadrant q) const {
    std::vector<std::size_t> out;
    out.reserve(size(q));
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (label[i] == q) out.push_back(i);
    }
    return out;
}

EquitablePartition equitable_partition(const PointSet& points) {
    const std::size_t n = points.size();
    if (n < 4 || n % 2 != 0) {
        throw InvalidInput("equitable partition needs an even number of points >= 4, got " +
                           std::to_string(n));
    }
    Sweep sweep(points);
    const std::int64_t target = sweep.target();
    auto finish = [&](EquitablePartition part) {
        check_partition(points, part);
        return part;
    };

    // The axis-aligned frame is kept when it works outright and no input
    // point sits on its origin; otherwise bracket from a generic direction,
    // where lattice-like inputs put no point on either line.
    Probe axis = sweep.probe({1, 0});
    if (axis.partition) {
        const OrthoFrame& f = axis.partition->frame;
        const bool origin_hit = std::any_of(points.begin(), points.end(), [&](Point p) {
            return f.x2(p) == 0 && f.y2(p) == 0;
        });
        if (!origin_hit) return finish(std::move(*axis.partition));
    }

    Point lo = generic_direction();
    Point hi = perp(lo);
    Probe at_lo = sweep.probe(lo);
    if (at_lo.partition) return finish(std::move(*at_lo.partition));
    Probe at_hi = sweep.probe(hi);
    if (at_hi.partition) return finish(std::move(*at_hi.partition));
    const int side_lo = sign(at_lo.perturbed_q1 - target);
    const int side_hi = sign(at_hi.perturbed_q1 - target);
    if (side_lo == side_hi || side_lo == 0 || side_hi == 0) {
        throw InternalInvariant("quarter-turn counts do not bracket the target");
    }
    const Point base = lo;

    for (int iter = 0; iter < 128; ++iter) {
        const auto mid = angular_midpoint(lo, hi);
        if (!mid) break;
        Probe at_mid = sweep.probe(*mid);
        if (at_mid.partition) return finish(std::move(*at_mid.partition));
        if (sign(at_mid.perturbed_q1 - target) == side_lo) {
            lo = *mid;
        } else {
            hi = *mid;
        }
    }

    // Exact stage: the counts only change at directions parallel or
    // perpendicular to a difference of two input points.
    std::vector<Point> events;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point d = into_window(points[j] - points[i], base);
            if (strictly_between(lo, d, hi)) events.push_back(d);
        }
    }
    std::sort(events.begin(), events.end(), [](Point a, Point b) { return cross(a, b) > 0; });
    events.erase(std::unique(events.begin(), events.end(),
                             [](Point a, Point b) { return cross(a, b) == 0; }),
                 events.end());

    std::ptrdiff_t below = -1;
    auto above = static_cast<std::ptrdiff_t>(events.size());
    while (above - below > 1) {
        const std::ptrdiff_t mid = below + (above - below) / 2;
        Probe at_mid = sweep.probe(events[static_cast<std::size_t>(mid)]);
        if (at_mid.partition) return finish(std::move(*at_mid.partition));
        if (sign(at_mid.perturbed_q1 - target) == side_lo) {
            below = mid;
        } else {
            above = mid;
        }
    }
    throw InternalInvariant("equitable partition sweep exhausted all candidate directions");
}

EquitablePartition frame_transform(const EquitablePartition& partition, FrameTransform kind) {
    EquitablePartition out;
    out.frame = partition.frame.transformed(kind);
    out.label.resize(partition.label.size());
    for (std::size_t i = 0; i < partition.label.size(); ++i) {
        out.label[i] = static_cast<std::uint8_t>(relabel(kind, partition.label[i]));
    }
    for (Quadrant q = 1; q <= 4; ++q) {
        out.sizes[static_cast<std::size_t>(relabel(kind, q) - 1)] = partition.size(q);
    }
    return out;
}

void check_partition(const PointSet& points, const EquitablePartition& partition) {
    const std::size_t n = points.size();
    if (partition.label.size() != n) {
        throw InternalInvariant("partition labels do not cover the point set");
    }
    std::array<std::size_t, 4> counted{};
    for (std::size_t i = 0; i < n; ++i) {
        const Quadrant q = partition.label[i];
        if (q < 1 || q > 4) {
            throw InternalInvariant("label out of range at point " + std::to_string(i));
        }
        if (!partition.frame.in_closed_quadrant(points[i], q)) {
            throw InternalInvariant("point " + std::to_string(i) + " " + to_string(points[i]) +
                                    " is not in closed quadrant " + std::to_string(q));
        }
        ++counted[static_cast<std::size_t>(q - 1)];
    }
    if (counted != partition.sizes) {
        throw InternalInvariant("partition sizes disagree with labels");
    }
    const std::size_t lo = n / 4;
    const std::size_t hi = (n + 3) / 4;
    const bool phase_a = counted == std::array{lo, hi, lo, hi};
    const bool phase_b = counted == std::array{hi, lo, hi, lo};
    if (!phase_a && !phase_b) {
        throw InternalInvariant("partition sizes break the floor/ceil pattern");
    }
}

}  // namespace acute

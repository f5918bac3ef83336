#include "acute/tour_builder.hpp"

#include "acute/errors.hpp"
#include "acute/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>

namespace acute {

namespace {

constexpr std::size_t kQuadruples = 5;

// members[q - 1] = indices labeled q, in input order.
using Members = std::array<std::vector<std::size_t>, 4>;

Members bucket(const EquitablePartition& partition) {
    Members members;
    for (Quadrant q = 1; q <= 4; ++q) members[static_cast<std::size_t>(q - 1)].reserve(partition.size(q));
    for (std::size_t i = 0; i < partition.label.size(); ++i) {
        members[static_cast<std::size_t>(partition.label[i] - 1)].push_back(i);
    }
    return members;
}

Members relabeled(Members members, FrameTransform kind) {
    Members out;
    for (Quadrant q = 1; q <= 4; ++q) {
        out[static_cast<std::size_t>(relabel(kind, q) - 1)] = std::move(members[static_cast<std::size_t>(q - 1)]);
    }
    return out;
}

const std::vector<std::size_t>& side(const Members& members, Quadrant q) {
    return members[static_cast<std::size_t>(q - 1)];
}

bool contains(std::span<const std::size_t> list, std::size_t idx) {
    return std::find(list.begin(), list.end(), idx) != list.end();
}

std::vector<std::size_t> without(const std::vector<std::size_t>& list,
                                 std::initializer_list<std::size_t> drop) {
    std::vector<std::size_t> out;
    out.reserve(list.size());
    for (std::size_t idx : list) {
        if (std::find(drop.begin(), drop.end(), idx) == drop.end()) out.push_back(idx);
    }
    return out;
}

// Joins paths that share endpoints, then drops the closing repeat of the
// first vertex.
std::vector<std::size_t> close_cycle(std::initializer_list<std::span<const std::size_t>> pieces) {
    std::vector<std::size_t> order;
    std::size_t total = 0;
    for (auto piece : pieces) total += piece.size();
    order.reserve(total);
    for (auto piece : pieces) {
        auto first = piece.begin();
        if (!order.empty()) {
            if (order.back() != piece.front()) {
                throw InternalInvariant("tour pieces do not share an endpoint");
            }
            ++first;
        }
        order.insert(order.end(), first, piece.end());
    }
    if (order.size() < 2 || order.front() != order.back()) {
        throw InternalInvariant("tour pieces do not close into a cycle");
    }
    order.pop_back();
    return order;
}

Tour finish_tour(const PointSet& points, std::vector<std::size_t> order, TourCase kind) {
    const VerificationReport report = verify_tour(points, order);
    Tour tour;
    tour.order = std::move(order);
    tour.max_angle = report.max_angle;
    tour.acute = report.is_permutation && report.acute;
    tour.case_taken = kind;
    if (!tour.acute) {
        std::string what = "assembled tour is not acute";
        if (!report.is_permutation) what = "assembled tour is not a permutation";
        throw InternalInvariant(what + " (" + std::string(to_string(kind)) + ")");
    }
    return tour;
}

nlohmann::json describe(const Quadruple& q) {
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t k = 0; k < 4; ++k) {
        pts.push_back({{"index", q.index[k]}, {"x", q.point[k].x}, {"y", q.point[k].y}});
    }
    return {{"points", pts},
            {"convexity", to_string(q.convexity)},
            {"center", q.center},
            {"types", q.types.to_string()}};
}

nlohmann::json describe(const OrthoFrame& f) {
    return {{"u", {f.u().x, f.u().y}},
            {"v", {f.v().x, f.v().y}},
            {"origin", {f.origin()[0], f.origin()[1]}}};
}

Quadruple relabeled(const Quadruple& quad, FrameTransform kind, const OrthoFrame& frame) {
    std::array<Point, 4> pts{};
    std::array<std::size_t, 4> idx{};
    for (Quadrant q = 1; q <= 4; ++q) {
        const auto to = static_cast<std::size_t>(relabel(kind, q) - 1);
        pts[to] = quad.at(q);
        idx[to] = quad.index_at(q);
    }
    Quadruple out = classify_quadruple(pts, frame);
    out.index = idx;
    return out;
}

struct Oriented {
    OrthoFrame frame;
    std::vector<FrameTransform> transforms;
    std::vector<Quadruple> quads;

    Oriented then(FrameTransform kind) const {
        Oriented out{frame.transformed(kind), transforms, {}};
        out.transforms.push_back(kind);
        for (const Quadruple& q : quads) out.quads.push_back(relabeled(q, kind, out.frame));
        return out;
    }
};

struct Plan {
    TourCase kind = TourCase::case1;
    Oriented view;
    std::size_t p = 0, q = 0, r = 0;
};

std::optional<Plan> find_case1(const Oriented& view) {
    for (std::size_t x = 0; x < view.quads.size(); ++x) {
        if (!view.quads[x].types.contains(Hook::upward)) continue;
        for (std::size_t y = 0; y < view.quads.size(); ++y) {
            if (y != x && view.quads[y].types.contains(Hook::downward)) {
                return Plan{TourCase::case1, view, x, y, 0};
            }
        }
    }
    return std::nullopt;
}

// Two upward concave-obtuse quadruples centered in one quadrant plus any
// third upward quadruple. Centers of such quadruples are hook endpoints,
// hence in quadrant 1 or 2; a reflection moves a quadrant-1 pair to 2.
std::optional<Plan> find_case2(Oriented view) {
    auto centered = [&](Quadrant c) {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < view.quads.size(); ++k) {
            const Quadruple& q = view.quads[k];
            if (q.types.contains(Hook::upward) && q.convexity == Convexity::concave_obtuse &&
                q.center == c) {
                out.push_back(k);
            }
        }
        return out;
    };
    if (centered(1).size() >= 2) {
        view = view.then(FrameTransform::reflect_swap_12_34);
    }
    std::vector<std::size_t> pair = centered(2);
    if (pair.size() < 2) return std::nullopt;

    // Choices depend only on geometry and input indices, never on list
    // order, so a mirrored input reflects back onto the same tour.
    auto lower = [&](std::size_t a, std::size_t b) {
        const Quadruple& qa = view.quads[a];
        const Quadruple& qb = view.quads[b];
        return std::pair{view.frame.y2(qa.at(2)), qa.index_at(2)} <
               std::pair{view.frame.y2(qb.at(2)), qb.index_at(2)};
    };
    std::sort(pair.begin(), pair.end(), lower);
    const std::size_t p = pair[0];
    const std::size_t q = pair[1];

    std::optional<std::size_t> r;
    auto rank = [&](std::size_t k) {
        const Quadruple& quad = view.quads[k];
        return std::pair{quad.convexity != Convexity::concave_obtuse, quad.index_at(1)};
    };
    for (std::size_t k = 0; k < view.quads.size(); ++k) {
        if (k == p || k == q || !view.quads[k].types.contains(Hook::upward)) continue;
        if (!r || rank(k) < rank(*r)) r = k;
    }
    if (!r) return std::nullopt;
    const TourCase kind = view.quads[*r].center == 2 ? TourCase::case2_2 : TourCase::case2_1;
    return Plan{kind, std::move(view), p, q, *r};
}

std::optional<Plan> dispatch(const Oriented& base) {
    if (auto plan = find_case1(base)) return plan;
    if (auto plan = find_case1(base.then(FrameTransform::rotate90))) return plan;
    // Normalize each hook type to upward.
    const std::array<Oriented, 4> normalized{
        base,
        base.then(FrameTransform::rotate180),
        base.then(FrameTransform::rotate90),
        base.then(FrameTransform::rotate90).then(FrameTransform::rotate180),
    };
    for (const Oriented& view : normalized) {
        if (auto plan = find_case2(view)) return plan;
    }
    return std::nullopt;
}

// Five points per quadrant, smallest by frame coordinates then index. A
// point sitting on the frame origin is skipped while the quadrant can spare
// it: the hook lemmas need no quadruple point at the origin.
Members representatives(const PointSet& points, const OrthoFrame& frame, const Members& members) {
    Members reps;
    for (Quadrant q = 1; q <= 4; ++q) {
        std::vector<std::size_t> pool = side(members, q);
        if (pool.size() > kQuadruples) {
            const auto at_origin = std::find_if(pool.begin(), pool.end(), [&](std::size_t i) {
                return frame.x2(points[i]) == 0 && frame.y2(points[i]) == 0;
            });
            if (at_origin != pool.end()) pool.erase(at_origin);
        }
        auto less = [&](std::size_t a, std::size_t b) {
            const auto ka = std::tuple{frame.x2(points[a]), frame.y2(points[a]), a};
            const auto kb = std::tuple{frame.x2(points[b]), frame.y2(points[b]), b};
            return ka < kb;
        };
        std::partial_sort(pool.begin(), pool.begin() + kQuadruples, pool.end(), less);
        pool.resize(kQuadruples);
        reps[static_cast<std::size_t>(q - 1)] = std::move(pool);
    }
    return reps;
}

}  // namespace

std::string_view to_string(TourCase c) {
    switch (c) {
        case TourCase::case1: return "case1";
        case TourCase::case2_1: return "case2.1";
        case TourCase::case2_2: return "case2.2";
    }
    return "unknown";
}

IndexPath alternating_path(std::size_t from, std::size_t to, std::span<const std::size_t> side_a,
                           std::span<const std::size_t> side_b,
                           std::optional<std::size_t> forced_first,
                           std::optional<std::size_t> forced_last) {
    const std::size_t length = side_a.size() + side_b.size();
    const bool to_in_a = contains(side_a, to);
    if (length < 2 || from == to || !contains(side_a, from) || (!to_in_a && !contains(side_b, to))) {
        throw ParityMismatch("alternating path endpoints are not on their sides");
    }
    const bool sizes_ok = to_in_a ? side_a.size() == side_b.size() + 1 : side_a.size() == side_b.size();
    if (!sizes_ok) {
        throw ParityMismatch("alternating path sides have " + std::to_string(side_a.size()) +
                             " and " + std::to_string(side_b.size()) + " points");
    }

    constexpr std::size_t kEmpty = kNoIndex;
    IndexPath path(length, kEmpty);
    std::array<std::pair<std::size_t, std::size_t>, 4> placed{};  // (slot, vertex)
    std::size_t n_placed = 0;
    auto place = [&](std::size_t slot, std::size_t idx) {
        const auto side = slot % 2 == 0 ? side_a : side_b;
        bool clash = path[slot] != kEmpty && path[slot] != idx;
        for (std::size_t k = 0; k < n_placed; ++k) {
            clash = clash || (placed[k].second == idx && placed[k].first != slot);
        }
        placed[n_placed++] = {slot, idx};
        if (!contains(side, idx) || clash) {
            throw ParityMismatch("forced vertex " + std::to_string(idx) + " conflicts at slot " +
                                 std::to_string(slot));
        }
        path[slot] = idx;
    };
    place(0, from);
    place(length - 1, to);
    if (forced_first) place(1, *forced_first);
    if (forced_last) place(length - 2, *forced_last);

    auto fixed = [&](std::size_t idx) {
        return idx == from || idx == to || idx == forced_first || idx == forced_last;
    };
    std::size_t next_a = 0;
    std::size_t next_b = 0;
    for (std::size_t slot = 0; slot < length; ++slot) {
        if (path[slot] != kEmpty) continue;
        const auto side = slot % 2 == 0 ? side_a : side_b;
        std::size_t& cursor = slot % 2 == 0 ? next_a : next_b;
        while (cursor < side.size() && fixed(side[cursor])) ++cursor;
        if (cursor == side.size()) {
            throw ParityMismatch("alternating path ran out of points");
        }
        path[slot] = side[cursor++];
    }
    for (std::size_t slot = 1; slot < length; ++slot) {
        if (path[slot] == path[slot - 1]) {
            throw ParityMismatch("alternating path repeats a vertex");
        }
    }
    return path;
}

namespace {

Tour assemble_case1(const PointSet& points, const Quadruple& p, const Quadruple& q,
                    const Members& members) {
    if (!p.types.contains(Hook::upward) || !q.types.contains(Hook::downward) ||
        p.index == q.index) {
        throw PreconditionViolation("case 1 needs an upward and a distinct downward quadruple");
    }
    const auto p1 = p.index_at(1), p2 = p.index_at(2), p3 = p.index_at(3), p4 = p.index_at(4);
    const auto q1 = q.index_at(1), q2 = q.index_at(2), q3 = q.index_at(3), q4 = q.index_at(4);

    const std::vector<std::size_t> up_hook{p1, p3, p4, p2};
    const std::vector<std::size_t> down_hook{q4, q2, q1, q3};
    const IndexPath s2s4 = alternating_path(p2, q4, without(side(members, 2), {q2}),
                                            without(side(members, 4), {p4}));
    const IndexPath s3s1 = alternating_path(q3, p1, without(side(members, 3), {p3}),
                                            without(side(members, 1), {q1}));
    return finish_tour(points, close_cycle({up_hook, s2s4, down_hook, s3s1}), TourCase::case1);
}

Tour assemble_case2(const PointSet& points, const Quadruple& p, const Quadruple& q,
                    const Quadruple& r, const OrthoFrame& frame, const Members& members,
                    Subcase subcase) {
    for (const Quadruple* quad : {&p, &q, &r}) {
        if (!quad->types.contains(Hook::upward)) {
            throw PreconditionViolation("case 2 quadruples must be upward");
        }
    }
    for (const Quadruple* quad : {&p, &q}) {
        if (quad->convexity != Convexity::concave_obtuse || quad->center != 2) {
            throw PreconditionViolation("case 2 needs P and Q concave-obtuse with center in quadrant 2");
        }
    }
    const auto p1 = p.index_at(1), p2 = p.index_at(2), p3 = p.index_at(3);
    const auto q1 = q.index_at(1), q2 = q.index_at(2), q3 = q.index_at(3), q4 = q.index_at(4);
    const auto r1 = r.index_at(1), r2 = r.index_at(2), r3 = r.index_at(3), r4 = r.index_at(4);
    if (frame.y2(points[p2]) > frame.y2(points[q2])) {
        throw PreconditionViolation("case 2 needs p2 below q2");
    }

    const std::vector<std::size_t> head{p1, p2, q1, q3, q4};
    if (subcase == Subcase::r1_center) {
        const std::vector<std::size_t> middle{r2, r4, r3};
        const IndexPath s4s2 = alternating_path(q4, r2, without(side(members, 4), {r4}),
                                                without(side(members, 2), {p2}), q2);
        const IndexPath s3s1 = alternating_path(r3, p1, without(side(members, 3), {q3}),
                                                without(side(members, 1), {q1}), r1, p3);
        return finish_tour(points, close_cycle({head, s4s2, middle, s3s1}), TourCase::case2_1);
    }
    const std::vector<std::size_t> middle{r4, r3, r1};
    const IndexPath s4s2s4 = alternating_path(q4, r4, side(members, 4),
                                              without(side(members, 2), {p2}), q2, r2);
    const IndexPath s1s3s1 = alternating_path(r1, p1, without(side(members, 1), {q1}),
                                              without(side(members, 3), {q3, r3}),
                                              std::nullopt, p3);
    return finish_tour(points, close_cycle({head, s4s2s4, middle, s1s3s1}), TourCase::case2_2);
}

void require_labels(const EquitablePartition& partition, std::initializer_list<const Quadruple*> quads) {
    for (const Quadruple* quad : quads) {
        for (Quadrant q = 1; q <= 4; ++q) {
            const std::size_t idx = quad->index_at(q);
            if (idx >= partition.label.size() || partition.label[idx] != q) {
                throw PreconditionViolation("quadruple point " + std::to_string(idx) +
                                            " is not labeled " + std::to_string(q));
            }
        }
    }
}

}  // namespace

Tour case1_tour(const PointSet& points, const Quadruple& p, const Quadruple& q,
                const EquitablePartition& partition) {
    check_partition(points, partition);
    require_labels(partition, {&p, &q});
    return assemble_case1(points, p, q, bucket(partition));
}

Tour case2_tour(const PointSet& points, const Quadruple& p, const Quadruple& q,
                const Quadruple& r, const EquitablePartition& partition, Subcase subcase) {
    check_partition(points, partition);
    require_labels(partition, {&p, &q, &r});
    return assemble_case2(points, p, q, r, partition.frame, bucket(partition), subcase);
}

Tour construct_acute_tour(const PointSet& points) {
    const std::size_t n = points.size();
    if (n % 2 != 0 || n < 4) {
        throw InvalidInput("an acute tour needs an even number of points >= 4, got " +
                           std::to_string(n));
    }
    if (n < kMinTourSize) {
        throw UnsupportedSize("n = " + std::to_string(n) +
                              " is below 20; use the exhaustive oracle for n <= 12");
    }
    return construct_acute_tour(points, equitable_partition(points));
}

Tour construct_acute_tour(const PointSet& points, const EquitablePartition& partition) {
    const std::size_t n = points.size();
    if (n % 2 != 0 || n < 4) {
        throw InvalidInput("an acute tour needs an even number of points >= 4, got " +
                           std::to_string(n));
    }
    if (n < kMinTourSize) {
        throw UnsupportedSize("n = " + std::to_string(n) +
                              " is below 20; use the exhaustive oracle for n <= 12");
    }
    check_partition(points, partition);
    for (Quadrant q = 1; q <= 4; ++q) {
        if (partition.size(q) != partition.size(opposite(q))) {
            throw PreconditionViolation("opposite quadrants differ in size");
        }
    }

    Members members = bucket(partition);
    const auto reps = representatives(points, partition.frame, members);
    nlohmann::json bundle{{"n", n}, {"frame", describe(partition.frame)}};

    // Re-pairing the representatives is only needed when a quadruple holds
    // the frame origin; ordinarily the first pairing dispatches.
    std::optional<Plan> plan;
    for (std::size_t shift = 0; shift < kQuadruples * kQuadruples * kQuadruples && !plan; ++shift) {
        const std::array<std::size_t, 4> offset{0, shift % 5, shift / 5 % 5, shift / 25};
        Oriented base{partition.frame, {}, {}};
        for (std::size_t j = 0; j < kQuadruples; ++j) {
            std::array<std::size_t, 4> idx{};
            for (std::size_t k = 0; k < 4; ++k) idx[k] = reps[k][(j + offset[k]) % kQuadruples];
            base.quads.push_back(classify_quadruple(points, idx, partition.frame));
        }
        if (shift == 0) {
            for (const Quadruple& q : base.quads) bundle["quadruples"].push_back(describe(q));
        }
        plan = dispatch(base);
    }
    if (!plan) {
        throw InternalInvariant("no case applies to any pairing of the representatives",
                                bundle.dump());
    }

    // Transforms only relabel, so the member lists move between quadrants.
    for (FrameTransform kind : plan->view.transforms) members = relabeled(std::move(members), kind);

    const auto& quads = plan->view.quads;
    bundle["case"] = to_string(plan->kind);
    for (FrameTransform kind : plan->view.transforms) bundle["transforms"].push_back(to_string(kind));
    bundle["chosen"] = {describe(quads[plan->p]), describe(quads[plan->q])};
    if (plan->kind != TourCase::case1) bundle["chosen"].push_back(describe(quads[plan->r]));

    try {
        Tour tour = plan->kind == TourCase::case1
                        ? assemble_case1(points, quads[plan->p], quads[plan->q], members)
                        : assemble_case2(points, quads[plan->p], quads[plan->q], quads[plan->r],
                                         plan->view.frame, members,
                                         plan->kind == TourCase::case2_1 ? Subcase::r1_center
                                                                         : Subcase::r2_center);
        tour.transforms = plan->view.transforms;
        return tour;
    } catch (const InternalInvariant& err) {
        throw InternalInvariant(err.what(), bundle.dump());
    }
}

IndexPath farthest_point_acute_path(const PointSet& points, std::size_t start_index) {
    const std::size_t n = points.size();
    if (n < 2) {
        throw InvalidInput("a path needs at least two points");
    }
    if (start_index >= n) {
        throw InvalidInput("start index out of range");
    }
    std::vector<std::size_t> remaining;
    remaining.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != start_index) remaining.push_back(i);
    }
    IndexPath path{start_index};
    path.reserve(n);
    while (!remaining.empty()) {
        const Point here = points[path.back()];
        std::size_t best = 0;
        Wide best_d = -1;
        for (std::size_t k = 0; k < remaining.size(); ++k) {
            const Wide d = squared_distance(here, points[remaining[k]]);
            // `remaining` stays sorted, so the first maximum has the smallest index.
            if (d > best_d) {
                best_d = d;
                best = k;
            }
        }
        path.push_back(remaining[best]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return path;
}

}  // namespace acute

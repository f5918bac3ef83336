#pragma once

#include "acute/geometry.hpp"
#include "acute/partition.hpp"
#include "acute/quadruple.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace acute {

enum class TourCase { case1, case2_1, case2_2 };

std::string_view to_string(TourCase c);

struct Tour {
    std::vector<std::size_t> order;  // cyclic permutation of 0..n-1
    Angle max_angle;
    bool acute = false;
    TourCase case_taken = TourCase::case1;
    std::vector<FrameTransform> transforms;  // applied to the partition, in order
};

/// Smallest n the construction covers.
inline constexpr std::size_t kMinTourSize = 20;

/// Acute spanning tour through every point.
///
/// Throws InvalidInput for odd n or n < 4, UnsupportedSize for even n below
/// 20, and InternalInvariant (with a JSON diagnostic bundle) if the assembled
/// tour fails the exact check.
Tour construct_acute_tour(const PointSet& points);

/// Same, with the partition supplied by the caller. Linear in n.
Tour construct_acute_tour(const PointSet& points, const EquitablePartition& partition);

/// Upward P, downward Q: p1 p3 p4 p2 + (S2/S4 path to q4) + q4 q2 q1 q3 +
/// (S3/S1 path to p1).
Tour case1_tour(const PointSet& points, const Quadruple& p, const Quadruple& q,
                const EquitablePartition& partition);

enum class Subcase { r1_center, r2_center };

/// Upward P, Q, R with P and Q concave-obtuse, centered in quadrant 2, and
/// p2 not above q2. R only contributes its upward hook r2 r4 r3 r1.
Tour case2_tour(const PointSet& points, const Quadruple& p, const Quadruple& q,
                const Quadruple& r, const EquitablePartition& partition, Subcase subcase);

/// Path from `from` to `to` that alternates between `side_a` (which holds
/// `from`) and `side_b`, visiting exactly their points. `forced_first` is
/// the second vertex and `forced_last` the second-to-last when given.
/// Unconstrained vertices follow the order of the side lists.
///
/// Throws ParityMismatch when sizes, sides or forced edges are inconsistent.
IndexPath alternating_path(std::size_t from, std::size_t to, std::span<const std::size_t> side_a,
                           std::span<const std::size_t> side_b,
                           std::optional<std::size_t> forced_first = std::nullopt,
                           std::optional<std::size_t> forced_last = std::nullopt);

/// Greedy spanning path: repeatedly move to the farthest unvisited point,
/// ties to the smaller index. Every interior angle is nonobtuse.
IndexPath farthest_point_acute_path(const PointSet& points, std::size_t start_index);

}  // namespace acute

#pragma once

#include "acute/geometry.hpp"

#include <span>
#include <vector>

namespace acute {

struct OracleResult {
    std::vector<std::size_t> best_order;  // starts at 0; lexicographically smallest optimum
    Angle min_max_angle;
    bool acute_tour_exists = false;
};

inline constexpr std::size_t kMaxOracleSize = 12;

/// Minimum over all Hamiltonian cycles of the largest rotation angle.
///
/// Angles are ranked exactly: the cosine at every vertex triple is compared
/// through integer certificates, so ties (in particular right angles) are
/// real ties. Throws UnsupportedSize unless 3 <= n <= 12.
OracleResult exhaustive_min_max_tour(const PointSet& points);

/// Largest rotation angle of a given cyclic order, in the oracle's own
/// arithmetic. For cross-checking the verifier.
Angle tour_max_angle(const PointSet& points, std::span<const std::size_t> order);

}  // namespace acute

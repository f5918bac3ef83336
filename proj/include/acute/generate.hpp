#pragma once

#include "acute/geometry.hpp"

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace acute {

enum class Distribution { uniform, gaussian, clustered, collinear, grid, circle };

inline constexpr std::array kDistributions{Distribution::uniform,   Distribution::gaussian,
                                           Distribution::clustered, Distribution::collinear,
                                           Distribution::grid,      Distribution::circle};

std::string_view to_string(Distribution d);

/// Throws InvalidInput for unknown names.
Distribution parse_distribution(std::string_view name);

/// n distinct integer points, fully determined by (n, d, seed, scale_k).
/// Coordinates span roughly +-1000 once divided by 10^scale_k.
std::vector<Point> generate_points(std::size_t n, Distribution d, std::uint64_t seed,
                                   int scale_k = 6);

}  // namespace acute

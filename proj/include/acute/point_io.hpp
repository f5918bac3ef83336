#pragma once

#include "acute/geometry.hpp"
#include "acute/tour_builder.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace acute {

inline constexpr int kDefaultScaleK = 6;
inline constexpr int kMaxScaleK = 9;

/// Exact decimal -> integer: value * 10^k, rounded half away from zero.
/// Accepts an optional sign, digits with an optional fraction, and an
/// optional exponent. Throws InvalidInput on malformed text or overflow.
Coord parse_scaled(std::string_view text, int scale_k);

/// Inverse of parse_scaled for values it produced: shortest exact decimal.
std::string format_scaled(Coord value, int scale_k);

/// One `x,y` pair per line; blank lines, `#` comments and an `x,y` header are
/// skipped. Duplicates are kept here and rejected by PointSet.
std::vector<Point> read_points_csv(std::istream& in, int scale_k);
void write_points_csv(std::ostream& out, std::span<const Point> points, int scale_k);

struct Timing {
    double partition_ms = 0.0;
    double construct_ms = 0.0;
};

/// Result document. Everything but "timing" is a deterministic function of
/// the input and flags.
std::string tour_document(const Tour& tour, std::size_t n, int scale_k, const Timing& timing);

/// Accepts a result document or a bare list of indices separated by
/// whitespace or commas.
std::vector<std::size_t> read_tour(std::istream& in);

}  // namespace acute

#include "acute/generate.hpp"

#include "acute/errors.hpp"
#include "acute/point_io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <unordered_set>

namespace acute {

namespace {

struct PointHash {
    std::size_t operator()(Point p) const noexcept {
        return std::hash<Coord>{}(p.x) * 0x9e3779b97f4a7c15ULL ^ std::hash<Coord>{}(p.y);
    }
};

Coord pow10(int k) {
    Coord r = 1;
    while (k-- > 0) r *= 10;
    return r;
}

// Draws until n distinct points are collected; `draw` returns one candidate.
template <class Draw>
std::vector<Point> distinct(std::size_t n, Draw draw) {
    std::vector<Point> out;
    out.reserve(n);
    std::unordered_set<Point, PointHash> seen(n * 2);
    std::size_t attempts = 0;
    while (out.size() < n) {
        if (++attempts > 100 * n + 1000) {
            throw InvalidInput("could not draw " + std::to_string(n) + " distinct points");
        }
        const Point p = draw();
        if (seen.insert(p).second) out.push_back(p);
    }
    return out;
}

}  // namespace

std::string_view to_string(Distribution d) {
    switch (d) {
        case Distribution::uniform: return "uniform";
        case Distribution::gaussian: return "gaussian";
        case Distribution::clustered: return "clustered";
        case Distribution::collinear: return "collinear";
        case Distribution::grid: return "grid";
        case Distribution::circle: return "circle";
    }
    return "unknown";
}

Distribution parse_distribution(std::string_view name) {
    for (Distribution d : kDistributions) {
        if (to_string(d) == name) return d;
    }
    throw InvalidInput("unknown distribution '" + std::string(name) +
                       "' (uniform, gaussian, clustered, collinear, grid, circle)");
}

std::vector<Point> generate_points(std::size_t n, Distribution d, std::uint64_t seed,
                                   int scale_k) {
    if (scale_k < 0 || scale_k > kMaxScaleK) {
        throw InvalidInput("scale exponent must be in [0, " + std::to_string(kMaxScaleK) + "]");
    }
    const Coord r = 1000 * pow10(scale_k);
    const auto rd = static_cast<double>(r);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Coord> uniform(-r, r);
    auto round = [](double v) { return static_cast<Coord>(std::llround(v)); };

    switch (d) {
        case Distribution::uniform:
            return distinct(n, [&] { return Point{uniform(rng), uniform(rng)}; });
        case Distribution::gaussian: {
            std::normal_distribution<double> normal(0.0, rd / 4);
            auto coord = [&] {
                for (;;) {
                    const double v = normal(rng);
                    if (std::abs(v) <= rd) return round(v);
                }
            };
            return distinct(n, [&] { return Point{coord(), coord()}; });
        }
        case Distribution::clustered: {
            const std::size_t k = std::clamp<std::size_t>(n / 50, 2, 20);
            std::uniform_real_distribution<double> centre(-0.8 * rd, 0.8 * rd);
            std::vector<std::array<double, 2>> centres(k);
            for (auto& c : centres) c = {centre(rng), centre(rng)};
            std::uniform_int_distribution<std::size_t> pick(0, k - 1);
            std::normal_distribution<double> spread(0.0, rd / 50);
            return distinct(n, [&] {
                const auto& c = centres[pick(rng)];
                const auto clamp = [&](double v) { return std::clamp(round(v), -r, r); };
                return Point{clamp(c[0] + spread(rng)), clamp(c[1] + spread(rng))};
            });
        }
        case Distribution::collinear: {
            // Line through a random lattice point with a small integer slope.
            std::uniform_int_distribution<Coord> step(1, 5);
            const Point dir{step(rng), step(rng) * (rng() % 2 ? 1 : -1)};
            const Coord span = r / std::max(std::abs(dir.x), std::abs(dir.y)) / 2;
            const Point anchor{uniform(rng) / 2, uniform(rng) / 2};
            std::uniform_int_distribution<Coord> t(-span, span);
            return distinct(n, [&] {
                const Coord s = t(rng);
                return Point{anchor.x + s * dir.x, anchor.y + s * dir.y};
            });
        }
        case Distribution::grid: {
            // Random subset of a square lattice barely larger than n.
            std::size_t side = 1;
            while (side * side < n + n / 4) ++side;
            std::vector<std::size_t> cells(side * side);
            std::iota(cells.begin(), cells.end(), 0);
            std::shuffle(cells.begin(), cells.end(), rng);
            const Coord pitch = 2 * r / static_cast<Coord>(side);
            std::vector<Point> out;
            out.reserve(n);
            for (std::size_t k = 0; k < n; ++k) {
                const auto row = static_cast<Coord>(cells[k] / side);
                const auto col = static_cast<Coord>(cells[k] % side);
                out.push_back({-r + col * pitch, -r + row * pitch});
            }
            return out;
        }
        case Distribution::circle: {
            std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
            return distinct(n, [&] {
                const double a = angle(rng);
                return Point{round(rd * std::cos(a)), round(rd * std::sin(a))};
            });
        }
    }
    throw InvalidInput("unknown distribution");
}

}  // namespace acute

#include "acute/errors.hpp"
#include "acute/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace acute;

TEST_CASE("nonobtuse_at decides by the sign of the dot product") {
    CHECK(nonobtuse_at({0, 0}, {1, 0}, {0, 1}));
    CHECK_FALSE(nonobtuse_at({0, 0}, {1, 0}, {-1, 1}));
    CHECK(nonobtuse_at({0, 0}, {2, 1}, {1, 2}));
    CHECK_THROWS_AS(nonobtuse_at({0, 0}, {0, 0}, {1, 2}), DegenerateInput);
    CHECK_THROWS_AS(nonobtuse_at({3, 3}, {1, 2}, {3, 3}), DegenerateInput);
}

TEST_CASE("orientation") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::counterclockwise);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orientation::collinear);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orientation::clockwise);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Coord> c(-50, 50);
    auto flip = [](Orientation o) {
        if (o == Orientation::collinear) return o;
        return o == Orientation::clockwise ? Orientation::counterclockwise : Orientation::clockwise;
    };
    for (int t = 0; t < 10000; ++t) {
        const Point p{c(rng), c(rng)}, q{c(rng), c(rng)}, r{c(rng), c(rng)};
        const Orientation o = orientation(p, q, r);
        CHECK(orientation(q, p, r) == flip(o));
        CHECK(orientation(p, r, q) == flip(o));
        CHECK(orientation(r, q, p) == flip(o));
    }
}

TEST_CASE("orientation stays exact at the coordinate limit") {
    const Coord m = kMaxCoordinate;
    CHECK(orientation({-m, -m}, {m, m}, {m - 1, m - 1}) == Orientation::collinear);
    CHECK(orientation({-m, -m}, {m, m}, {m - 1, m}) == Orientation::counterclockwise);
    CHECK(nonobtuse_at({-m, m}, {m, m}, {-m, -m}));
    CHECK_FALSE(nonobtuse_at({-m + 1, m}, {m, m}, {-m, -m}));
}

TEST_CASE("point_in_triangle") {
    CHECK(point_in_triangle({1, 1}, {0, 0}, {4, 0}, {0, 4}) == TriangleLocation::strictly_inside);
    CHECK(point_in_triangle({2, 0}, {0, 0}, {4, 0}, {0, 4}) == TriangleLocation::on_boundary);
    CHECK(point_in_triangle({-1, 1}, {8, 6}, {-10, -2}, {3, -8}) ==
          TriangleLocation::strictly_inside);
    CHECK(point_in_triangle({5, 5}, {0, 0}, {4, 0}, {0, 4}) == TriangleLocation::outside);
    CHECK(point_in_triangle({0, 0}, {0, 0}, {4, 0}, {0, 4}) == TriangleLocation::on_boundary);

    SUBCASE("degenerate triangles") {
        CHECK(point_in_triangle({1, 1}, {0, 0}, {2, 2}, {3, 3}) == TriangleLocation::on_boundary);
        CHECK(point_in_triangle({4, 4}, {0, 0}, {2, 2}, {3, 3}) == TriangleLocation::outside);
        CHECK(point_in_triangle({1, 0}, {0, 0}, {2, 2}, {3, 3}) == TriangleLocation::outside);
    }

    SUBCASE("interior points see the vertices around a full turn") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<Coord> c(-1000, 1000);
        int inside = 0;
        for (int t = 0; t < 20000; ++t) {
            const Point s{c(rng), c(rng)}, a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)};
            if (point_in_triangle(s, a, b, d) != TriangleLocation::strictly_inside) continue;
            ++inside;
            const double sum = rotation_angle(a, s, b).radians() +
                               rotation_angle(b, s, d).radians() +
                               rotation_angle(d, s, a).radians();
            CHECK(sum == doctest::Approx(2 * std::numbers::pi).epsilon(1e-9));
        }
        CHECK(inside > 1000);
    }
}

TEST_CASE("rotation_angle") {
    CHECK(rotation_angle({1, 0}, {0, 0}, {0, 1}).radians() == doctest::Approx(std::numbers::pi / 2));
    CHECK(rotation_angle({1, 0}, {0, 0}, {2, 0}).radians() == 0.0);
    CHECK(rotation_angle({1, 0}, {0, 0}, {-1, 0}).radians() == doctest::Approx(std::numbers::pi));
    CHECK_THROWS_AS(rotation_angle({0, 0}, {0, 0}, {1, 0}), DegenerateInput);
}

TEST_CASE("exact predicate agrees with the float angle away from the right angle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<Coord> c(-1'000'000, 1'000'000);
    int disagreements = 0;
    int near_boundary = 0;
    for (int t = 0; t < 1'000'000; ++t) {
        const Point q{c(rng), c(rng)}, a{c(rng), c(rng)}, b{c(rng), c(rng)};
        if (a == q || b == q) continue;
        const bool exact = nonobtuse_at(q, a, b);
        const double angle = rotation_angle(a, q, b).radians();
        if (exact != (angle <= std::numbers::pi / 2)) {
            if (std::abs(angle - std::numbers::pi / 2) < 1e-9) {
                ++near_boundary;
            } else {
                ++disagreements;
            }
        }
    }
    CHECK(disagreements == 0);
    CHECK(near_boundary < 10);
}

TEST_CASE("right angles are nonobtuse exactly") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Coord> c(-1'000'000, 1'000'000);
    std::uniform_int_distribution<Coord> k(1, 1000);
    for (int t = 0; t < 100000; ++t) {
        const Point q{c(rng), c(rng)};
        const Point d{c(rng) / 1000, c(rng) / 1000};
        if (d == Point{0, 0}) continue;
        const Coord s = k(rng);
        const Point a{q.x + d.x, q.y + d.y};
        const Point b{q.x - d.y * s, q.y + d.x * s};
        CHECK(nonobtuse_at(q, a, b));
        const Point past{b.x - d.x, b.y - d.y};  // nudged beyond the perpendicular
        CHECK_FALSE(nonobtuse_at(q, a, past));
    }
}

TEST_CASE("PointSet validates its input") {
    CHECK_THROWS_AS(PointSet({{0, 0}, {1, 1}, {0, 0}}), InvalidInput);
    CHECK_THROWS_AS(PointSet({{kMaxCoordinate + 1, 0}}), InvalidInput);
    const PointSet ok({{3, 1}, {-kMaxCoordinate, kMaxCoordinate}});
    CHECK(ok.size() == 2);
    CHECK(ok[0] == Point{3, 1});
}

TEST_CASE("left_of and below are weak comparisons") {
    CHECK(left_of({1, 5}, {1, -5}));
    CHECK_FALSE(left_of({2, 0}, {1, 0}));
    CHECK(below({7, 2}, {-7, 2}));
    CHECK_FALSE(below({0, 3}, {0, 2}));
}

TEST_CASE("Angle rejects values outside [0, pi]") {
    CHECK_THROWS_AS(Angle(-0.1), InvalidInput);
    CHECK_THROWS_AS(Angle(4.0), InvalidInput);
    CHECK(Angle(1.0).radians() == 1.0);
}

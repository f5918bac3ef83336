#include "acute/errors.hpp"
#include "acute/generate.hpp"
#include "acute/oracle.hpp"
#include "acute/verifier.hpp"

#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <numeric>

using namespace acute;

namespace {

// Independent of the oracle's ranking: tries every cyclic order and asks
// only the exact predicate.
bool some_tour_is_acute(const PointSet& points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (verify_tour(points, order).acute) return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

double brute_min_max(const PointSet& points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    double best = 10.0;
    do {
        best = std::min(best, verify_tour(points, order).max_angle.radians());
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return best;
}

}  // namespace

TEST_CASE("triangle with its center forces 2pi/3") {
    const PointSet points({{0, 0}, {1'000'000, 0}, {500'000, 866'025}, {500'000, 288'675}});
    const OracleResult r = exhaustive_min_max_tour(points);
    CHECK(r.min_max_angle.radians() == doctest::Approx(2 * std::numbers::pi / 3).epsilon(1e-4));
    CHECK_FALSE(r.acute_tour_exists);
    CHECK(r.best_order.front() == 0);
    CHECK(tour_max_angle(points, r.best_order).radians() == r.min_max_angle.radians());
}

TEST_CASE("five collinear points force a straight angle") {
    const PointSet points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    const OracleResult r = exhaustive_min_max_tour(points);
    CHECK(r.min_max_angle.radians() == std::numbers::pi);
    CHECK_FALSE(r.acute_tour_exists);
}

TEST_CASE("four collinear points zigzag") {
    const PointSet points({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    const OracleResult r = exhaustive_min_max_tour(points);
    CHECK(r.acute_tour_exists);
    CHECK(r.min_max_angle.radians() == 0.0);
    const std::vector<std::size_t> zigzag{0, 2, 1, 3};
    CHECK(tour_max_angle(points, zigzag).radians() == 0.0);
}

TEST_CASE("square corners") {
    // The boundary cycle has four right angles, but the crossing cycle
    // does better: every corner sees the other two at 45 degrees.
    const PointSet points({{0, 0}, {5, 0}, {5, 5}, {0, 5}});
    const OracleResult r = exhaustive_min_max_tour(points);
    CHECK(r.acute_tour_exists);
    CHECK(r.min_max_angle.radians() == doctest::Approx(std::numbers::pi / 4));
    CHECK(r.best_order == std::vector<std::size_t>{0, 1, 3, 2});
    const std::vector<std::size_t> boundary{0, 1, 2, 3};
    CHECK(tour_max_angle(points, boundary).radians() == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("size limits") {
    CHECK_THROWS_AS(exhaustive_min_max_tour(PointSet({{0, 0}, {1, 1}})), UnsupportedSize);
    CHECK_THROWS_AS(exhaustive_min_max_tour(PointSet(generate_points(13, Distribution::uniform, 1))),
                    UnsupportedSize);
    const OracleResult three = exhaustive_min_max_tour(PointSet({{0, 0}, {4, 0}, {0, 3}}));
    CHECK(three.best_order == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("existence agrees with a predicate-only enumeration") {
    int acute = 0, not_acute = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 3 + seed % 6;
        const Distribution d = kDistributions[seed % kDistributions.size()];
        const PointSet points(generate_points(n, d, seed, 0));
        const OracleResult r = exhaustive_min_max_tour(points);
        const bool expected = some_tour_is_acute(points);
        CHECK(r.acute_tour_exists == expected);
        (expected ? acute : not_acute) += 1;
        CHECK(verify_tour(points, r.best_order).acute == r.acute_tour_exists);
    }
    CHECK(acute > 0);
    CHECK(not_acute > 0);
}

TEST_CASE("optimum matches brute force over all orders") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 3 + seed % 5;
        const PointSet points(generate_points(n, Distribution::uniform, seed, 0));
        const OracleResult r = exhaustive_min_max_tour(points);
        CHECK(r.min_max_angle.radians() == doctest::Approx(brute_min_max(points)).epsilon(1e-12));
    }
}

TEST_CASE("best order is the smallest optimal rotation and direction") {
    const PointSet points(generate_points(7, Distribution::gaussian, 3));
    const OracleResult r = exhaustive_min_max_tour(points);
    REQUIRE(r.best_order.size() == 7);
    CHECK(r.best_order[0] == 0);
    CHECK(r.best_order[1] < r.best_order.back());
    CHECK(exhaustive_min_max_tour(points).best_order == r.best_order);
}

TEST_CASE("twelve points finish") {
    const PointSet points(generate_points(12, Distribution::uniform, 12));
    const OracleResult r = exhaustive_min_max_tour(points);
    CHECK(r.best_order.size() == 12);
    CHECK(verify_tour(points, r.best_order).acute == r.acute_tour_exists);
}

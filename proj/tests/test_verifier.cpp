#include "acute/errors.hpp"
#include "acute/generate.hpp"
#include "acute/oracle.hpp"
#include "acute/verifier.hpp"

#include <doctest.h>

#include <numbers>
#include <numeric>
#include <random>

using namespace acute;

TEST_CASE("square in cyclic order") {
    const PointSet square({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    const std::vector<std::size_t> order{0, 1, 2, 3};
    const VerificationReport r = verify_tour(square, order);
    CHECK(r.is_permutation);
    CHECK(r.acute);
    CHECK(r.violations.empty());
    CHECK(r.max_angle.radians() == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("sorted collinear cycle has straight angles inside") {
    const PointSet line({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    const std::vector<std::size_t> order{0, 1, 2, 3};
    const VerificationReport r = verify_tour(line, order);
    CHECK(r.is_permutation);
    CHECK_FALSE(r.acute);
    REQUIRE(r.violations.size() == 2);
    CHECK(r.violations[0].vertex == 1);
    CHECK(r.violations[1].vertex == 2);
    CHECK(r.violations[0].angle.radians() == doctest::Approx(std::numbers::pi));
    CHECK(r.max_angle.radians() == doctest::Approx(std::numbers::pi));

    const std::vector<std::size_t> zigzag{0, 2, 1, 3};
    const VerificationReport z = verify_tour(line, zigzag);
    CHECK(z.acute);
    CHECK(z.max_angle.radians() == 0.0);
}

TEST_CASE("non-permutations and malformed orders") {
    const PointSet square({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    const std::vector<std::size_t> repeated{0, 1, 1, 3};
    const VerificationReport r = verify_tour(square, repeated);
    CHECK_FALSE(r.is_permutation);
    CHECK_FALSE(r.acute);

    const std::vector<std::size_t> short_order{0, 1, 2};
    CHECK_THROWS_AS(verify_tour(square, short_order), InvalidInput);
    const std::vector<std::size_t> out_of_range{0, 1, 2, 4};
    CHECK_THROWS_AS(verify_tour(square, out_of_range), InvalidInput);
    const std::vector<std::size_t> pair{0, 1};
    CHECK_THROWS_AS(verify_tour(PointSet({{0, 0}, {1, 1}}), pair), InvalidInput);
}

TEST_CASE("verify_path") {
    CHECK(verify_path(std::vector<Point>{{0, 0}, {1, 0}}).acute);
    CHECK_THROWS_AS(verify_path(std::vector<Point>{{0, 0}, {1, 0}, {0, 0}}), InvalidInput);
    const VerificationReport r = verify_path(std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(r.acute);
    CHECK(r.max_angle.radians() == doctest::Approx(std::numbers::pi / 2));
    CHECK_THROWS_AS(verify_path(std::vector<Point>{{0, 0}}), InvalidInput);

    const VerificationReport bent = verify_path(std::vector<Point>{{0, 0}, {1, 0}, {2, 1}});
    CHECK_FALSE(bent.acute);
    REQUIRE(bent.violations.size() == 1);
    CHECK(bent.violations[0].vertex == 1);
}

TEST_CASE("verifier and oracle report the same max angle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 8);
        const PointSet points(generate_points(n, kDistributions[t % kDistributions.size()],
                                              static_cast<std::uint64_t>(t), 2));
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const double reported = verify_tour(points, order).max_angle.radians();
        CHECK(std::abs(reported - tour_max_angle(points, order).radians()) <= 1e-12);
    }
}

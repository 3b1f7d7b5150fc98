#include <doctest.h>

#include <cmath>

#include "explore/errors.hpp"
#include "explore/geometry.hpp"
#include "explore/rng.hpp"

using namespace explore;

namespace {
constexpr double kPi = kTwoPi / 2.0;

double basis_orthonormality_error(const AffinePlane& p) {
    const double e1 = std::abs(dot(p.basis[0], p.basis[0]) - 1.0);
    const double e2 = std::abs(dot(p.basis[1], p.basis[1]) - 1.0);
    const double e3 = std::abs(dot(p.basis[0], p.basis[1]));
    return std::max({e1, e2, e3});
}
} // namespace

TEST_CASE("plane from three axis-aligned points") {
    const AffinePlane p = plane_from_three_points({0, 0, 1}, {1, 0, 1}, {0, 1, 1});
    CHECK(p.offset == Point3{0, 0, 1});
    CHECK(basis_orthonormality_error(p) <= 1e-9);
    // Basis spans the xy directions: z components vanish.
    CHECK(std::abs(p.basis[0].z) <= 1e-12);
    CHECK(std::abs(p.basis[1].z) <= 1e-12);
}

TEST_CASE("plane rejects collinear points") {
    CHECK_THROWS_AS(plane_from_three_points({0, 0, 0}, {1, 1, 1}, {2, 2, 2}),
                    DegenerateInputError);
    CHECK_THROWS_AS(plane_from_three_points({1, 2, 3}, {1, 2, 3}, {4, 5, 6}),
                    DegenerateInputError);
}

TEST_CASE("constructed planes contain their three points") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Point3 p1{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const Point3 p2{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const Point3 p3{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        AffinePlane plane;
        try {
            plane = plane_from_three_points(p1, p2, p3);
        } catch (const DegenerateInputError&) {
            continue;
        }
        CHECK(basis_orthonormality_error(plane) <= 1e-9);
        for (const auto& p : {p1, p2, p3}) {
            const Point3 back = lift_from_plane(plane, project_point(plane, p));
            CHECK(distance(back, p) <= 1e-9);
        }
    }
}

TEST_CASE("projection of axis-aligned plane") {
    const AffinePlane p = plane_from_three_points({0, 0, 1}, {1, 0, 1}, {0, 1, 1});
    const Point2 q = project_point(p, {3, 4, 7});
    CHECK(q.u == doctest::Approx(3).epsilon(1e-12));
    CHECK(q.v == doctest::Approx(4).epsilon(1e-12));
    CHECK(project_point(p, p.offset) == Point2{0, 0});
    const Point3 lifted = lift_from_plane(p, {2, 5});
    CHECK(distance(lifted, {2, 5, 1}) <= 1e-12);
    CHECK(distance(lift_from_plane(p, {0, 0}), p.offset) == 0.0);
}

TEST_CASE("project/lift roundtrip on random planes") {
    Rng rng(7);
    const AffinePlane plane =
        plane_from_three_points({0.3, -1.2, 0.8}, {2.1, 0.4, -0.5}, {-1.0, 2.2, 1.7});
    for (int i = 0; i < 100; ++i) {
        const Point2 q{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        const Point2 back = project_point(plane, lift_from_plane(plane, q));
        CHECK(std::abs(back.u - q.u) <= 1e-9);
        CHECK(std::abs(back.v - q.v) <= 1e-9);
    }
}

TEST_CASE("distance score values") {
    const ScoreParams sp;
    CHECK(distance_score({0, 0, 0}, {1, 0, 0}, sp) == 0.0);
    CHECK(distance_score({0, 0, 0}, {0, 0, 2}, sp) == 0.5);
    CHECK(distance_score({1, 2, 3}, {1, 2, 3}, sp) == 0.0);
    // Just below the coincidence threshold.
    CHECK(distance_score({0, 0, 0}, {0, 0, 0.5e-6}, sp) == 0.0);
}

TEST_CASE("distance score properties") {
    Rng rng(3);
    const ScoreParams sp;
    for (int i = 0; i < 200; ++i) {
        const Point3 a{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
        const Point3 b{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
        const double s = distance_score(a, b, sp);
        CHECK(s == distance_score(b, a, sp)); // symmetry, exact
        CHECK(s < 1.0);
        const double d = distance(a, b);
        if (d >= sp.epsilon) {
            CHECK((s >= 0.0) == (d >= 1.0));
        } else {
            CHECK(s == 0.0);
        }
    }
    // Monotone in distance above the threshold.
    double prev = distance_score({0, 0, 0}, {0, 0, 0.5}, sp);
    for (double d = 0.6; d < 30.0; d += 0.5) {
        const double s = distance_score({0, 0, 0}, {0, 0, d}, sp);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("relative angle") {
    CHECK(relative_angle({0, 0}, {1, 0}) == 0.0);
    CHECK(relative_angle({0, 0}, {0, 2}) == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(relative_angle({1, 1}, {0, 1}) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK_THROWS_AS(relative_angle({2, 3}, {2, 3}), DegenerateInputError);

    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Point2 origin{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const double theta = rng.uniform(0, kTwoPi);
        const double radius = rng.uniform(0.1, 5.0);
        const Point2 p = origin + Point2{radius * std::cos(theta), radius * std::sin(theta)};
        const double a = relative_angle(origin, p);
        CHECK(a >= 0.0);
        CHECK(a < kTwoPi);
        const double diff = std::abs(std::remainder(a - theta, kTwoPi));
        CHECK(diff <= 1e-9);
    }
}

TEST_CASE("segment intersection") {
    CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {1, 5}));   // T-touch
    CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));   // collinear overlap
    CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
}

TEST_CASE("median-distance normalization") {
    PointCloud3 cloud{{0, 0, 0}, {0, 0, 2}, {0, 0, 4}};
    // Pairwise distances 2, 2, 4 -> lower median 2.
    const double scale = normalize_median_distance(cloud, 1e-6);
    CHECK(scale == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(distance(cloud[0], cloud[1]) == doctest::Approx(1.0).epsilon(1e-12));

    PointCloud3 single{{1, 2, 3}};
    CHECK(normalize_median_distance(single, 1e-6) == 1.0);

    PointCloud3 coincident{{1, 1, 1}, {1, 1, 1}};
    CHECK(normalize_median_distance(coincident, 1e-6) == 1.0);
}

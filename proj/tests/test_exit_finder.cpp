#include <doctest.h>

#include <cmath>

#include "explore/errors.hpp"
#include "explore/exit_finder.hpp"
#include "explore/rng.hpp"
#include "explore/synthetic.hpp"

using namespace explore;

namespace {

constexpr double kBin = kTwoPi / 360.0;

AngularMap map_with_bins(const std::vector<int>& covered_bins, double d_hat = 1.0) {
    AngularMap map;
    map.r = 1.0;
    for (const int b : covered_bins) {
        map.covered.push_back({b * kBin, (b + 1) * kBin, d_hat});
    }
    return map;
}

std::vector<int> bin_range(int first, int last_exclusive) {
    std::vector<int> bins;
    for (int b = first; b < last_exclusive; ++b) bins.push_back(b);
    return bins;
}

AffinePlane xy_plane() {
    return plane_from_three_points({0, 0, 1}, {1, 0, 1}, {0, 1, 1});
}

} // namespace

TEST_CASE("bin_points assigns by angle and averages norms") {
    const double a = 1.5 * kBin; // 1.5 degrees
    const std::vector<Point2> pts{{3.0 * std::cos(a), 3.0 * std::sin(a)}, {0.0, 5.0}};
    const auto [bins, r] = bin_points(pts, {0, 0});
    CHECK(bins[1].members.size() == 1);
    CHECK(bins[90].members.size() == 1);
    CHECK(r == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("bin_points boundary and skip rules") {
    const std::vector<Point2> pts{{1.5, 0.5}, {0.5, 0.5}};
    const auto [bins, r] = bin_points(pts, {0.5, 0.5});
    CHECK(bins[0].members.size() == 1); // angle exactly 0 -> bin 0
    // The coincident point is skipped and r uses the plane-origin norm.
    CHECK(r == doctest::Approx(std::sqrt(2.5)).epsilon(1e-12));

    CHECK_THROWS_AS(bin_points({}, {0, 0}), EmptyInputError);
    CHECK_THROWS_AS(bin_points({{2, 2}}, {2, 2}), EmptyInputError);
}

TEST_CASE("bin_points r variants") {
    const std::vector<Point2> pts{{10, 0}};
    const auto [bins_o, r_origin] = bin_points(pts, {8, 0}, false);
    CHECK(r_origin == doctest::Approx(10.0));
    const auto [bins_a, r_agent] = bin_points(pts, {8, 0}, true);
    CHECK(r_agent == doctest::Approx(2.0));
}

TEST_CASE("bin partition of random points") {
    Rng rng(21);
    std::vector<Point2> pts(500);
    for (auto& p : pts) p = {rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Point2 agent{0.3, -0.2};
    const auto [bins, r] = bin_points(pts, agent);

    std::size_t members = 0;
    for (const auto& bin : bins) {
        members += bin.members.size();
        for (const auto& p : bin.members) {
            const double angle = relative_angle(agent, p);
            CHECK(angle >= bin.index * kBin);
            CHECK(angle < (bin.index + 1) * kBin);
        }
    }
    CHECK(members == pts.size());
}

TEST_CASE("coverage needs more than one point per bin") {
    std::vector<Point2> pts{{2, 0}, {4, 0}, {0, 3}};
    const auto [bins, r] = bin_points(pts, {0, 0});
    const AngularMap map = build_angular_map(bins, {0, 0}, r);

    REQUIRE(map.covered.size() == 1); // only bin 0 holds two points
    CHECK(map.covered[0].start == 0.0);
    CHECK(map.covered[0].d_hat == doctest::Approx(3.0).epsilon(1e-12)); // mean of 2 and 4

    const AngularMap none = build_angular_map(bin_points({{1, 0}, {0, 1}}, {0, 0}).first, {0, 0},
                                              1.0);
    CHECK(none.covered.empty());
}

TEST_CASE("largest gap, single run") {
    const GapSegment gap = largest_gap(map_with_bins(bin_range(0, 300)));
    CHECK(gap.start == doctest::Approx(300 * kBin).epsilon(1e-12));
    CHECK(gap.end == doctest::Approx(360 * kBin).epsilon(1e-12));
    CHECK(gap.midpoint == doctest::Approx(330 * kBin).epsilon(1e-12));
}

TEST_CASE("largest gap merges across the seam") {
    const GapSegment gap = largest_gap(map_with_bins(bin_range(30, 330)));
    CHECK(gap.start == doctest::Approx(330 * kBin).epsilon(1e-12));
    CHECK(gap.end == doctest::Approx(390 * kBin).epsilon(1e-12));
    CHECK(gap.midpoint == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("largest gap without circular merging splits at the seam") {
    const GapSegment gap = largest_gap(map_with_bins(bin_range(30, 330)), false);
    CHECK(gap.start == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gap.end == doctest::Approx(30 * kBin).epsilon(1e-12));
    CHECK(gap.midpoint == doctest::Approx(15 * kBin).epsilon(1e-12));
}

TEST_CASE("largest gap edge cases") {
    const GapSegment whole = largest_gap(map_with_bins({}));
    CHECK(whole.start == 0.0);
    CHECK(whole.end == doctest::Approx(kTwoPi).epsilon(1e-12));
    CHECK(whole.midpoint == doctest::Approx(kTwoPi / 2).epsilon(1e-12));

    CHECK_THROWS_AS(largest_gap(map_with_bins(bin_range(0, 360))), NoGapError);

    // Two equal gaps: the smaller start angle wins.
    std::vector<int> covered = bin_range(10, 100);
    for (const int b : bin_range(110, 360)) covered.push_back(b);
    const GapSegment tie = largest_gap(map_with_bins(covered));
    CHECK(tie.start == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gap interior avoids all covered bins") {
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> covered;
        for (int b = 0; b < 360; ++b) {
            if (rng.uniform() < 0.7) covered.push_back(b);
        }
        if (covered.empty() || covered.size() == 360) continue;
        const GapSegment gap = largest_gap(map_with_bins(covered));
        for (const int b : covered) {
            const double lo = b * kBin;
            const double hi = (b + 1) * kBin;
            // Compare on the unwrapped interval [start, end).
            for (const double shift : {0.0, kTwoPi}) {
                const bool overlaps =
                    lo + shift < gap.end - 1e-12 && hi + shift > gap.start + 1e-12;
                CHECK_FALSE(overlaps);
            }
        }
    }
}

TEST_CASE("find_exit on a ring with a sixty-degree opening") {
    // Two points per degree for 0..299 at radius 5; agent at the plane origin.
    std::vector<Point3> cloud;
    const AffinePlane plane = xy_plane();
    for (int deg = 0; deg < 300; ++deg) {
        for (const double frac : {0.25, 0.75}) {
            const double a = (deg + frac) * kBin;
            cloud.push_back(lift_from_plane(plane, {5.0 * std::cos(a), 5.0 * std::sin(a)}));
        }
    }
    const Point3 agent = plane.offset;
    const ExitPoint exit = find_exit(cloud, agent, plane);

    CHECK(exit.angle == doctest::Approx(330 * kBin).epsilon(1e-9));
    CHECK(exit.range == doctest::Approx(5.0).epsilon(1e-9));
    const Point2 x2d = project_point(plane, agent);
    CHECK(distance(exit.point2, x2d) == doctest::Approx(exit.range).epsilon(1e-9));
    // point3 sits on the plane and projects back to point2.
    const Point2 back = project_point(plane, exit.point3);
    CHECK(std::abs(back.u - exit.point2.u) <= 1e-9);
    CHECK(std::abs(back.v - exit.point2.v) <= 1e-9);
    CHECK(distance(lift_from_plane(plane, back), exit.point3) <= 1e-9);
}

TEST_CASE("find_exit errors") {
    const AffinePlane plane = xy_plane();
    CHECK_THROWS_AS(find_exit({}, {0, 0, 1}, plane), EmptyInputError);

    // Dense full ring: every bin covered.
    std::vector<Point3> ring;
    for (int deg = 0; deg < 360; ++deg) {
        for (const double frac : {0.25, 0.75}) {
            const double a = (deg + frac) * kBin;
            ring.push_back(lift_from_plane(plane, {4.0 * std::cos(a), 4.0 * std::sin(a)}));
        }
    }
    CHECK_THROWS_AS(find_exit(ring, {0, 0, 1}, plane), NoGapError);
}

TEST_CASE("exit angle is rotation-equivariant within one bin") {
    const RingRoom room = ring_room(5, 40.0, 30.0);
    const AffinePlane plane = xy_plane();
    const ExitParams params;

    AngularMap map;
    const ExitPoint base = find_exit_2d(room.points, {0, 0}, plane, params, &map);

    const double theta = 37.3 * kBin;
    std::vector<Point2> rotated;
    rotated.reserve(room.points.size());
    for (const auto& p : room.points) {
        rotated.push_back({p.u * std::cos(theta) - p.v * std::sin(theta),
                           p.u * std::sin(theta) + p.v * std::cos(theta)});
    }
    const ExitPoint turned = find_exit_2d(rotated, {0, 0}, plane, params, nullptr);
    const double delta = std::abs(std::remainder(turned.angle - base.angle - theta, kTwoPi));
    CHECK(delta <= kBin);
}

TEST_CASE("exit angle falls inside the doorway of seeded rooms") {
    Rng rng(23);
    const AffinePlane plane = xy_plane();
    for (int trial = 0; trial < 10; ++trial) {
        const double door_start = rng.uniform(0.0, 360.0);
        const double door_width = rng.uniform(25.0, 80.0);
        const RingRoom room = ring_room(1000 + trial, door_start, door_width);
        const ExitPoint exit = find_exit_2d(room.points, {0, 0}, plane, {}, nullptr);
        const double exit_deg = exit.angle * 360.0 / kTwoPi;
        const double rel = std::fmod(exit_deg - door_start + 720.0, 360.0);
        CHECK(rel <= door_width);
    }
}

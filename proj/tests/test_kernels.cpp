#include <doctest.h>

#include "explore/kernels.hpp"
#include "explore/rng.hpp"
#include "support.hpp"

using namespace explore;
using testsupport::random_cloud;

// The OpenMP variants must match the serial reference bitwise, whatever the
// thread count: every element is computed independently.

TEST_CASE("best_rep_scores serial and parallel agree bitwise") {
    Rng rng(101);
    for (const std::size_t n : {1u, 7u, 63u, 64u, 513u}) {
        const PointCloud3 cloud = random_cloud(rng, n, 8.0);
        std::vector<std::uint8_t> active(n, 1);
        for (std::size_t i = 0; i < n; i += 3) active[i] = 0;
        std::vector<int> reps;
        for (std::size_t i = 0; i < n; i += 5) reps.push_back(static_cast<int>(i));
        if (reps.empty()) reps.push_back(0);

        std::vector<double> serial, parallel;
        const ScoreParams sp;
        kernels::best_rep_scores_serial(cloud, active, cloud, reps, sp, serial);
        kernels::best_rep_scores_parallel(cloud, active, cloud, reps, sp, parallel);
        CHECK(serial == parallel);
    }
}

TEST_CASE("greedy_gains serial and parallel agree bitwise") {
    Rng rng(202);
    for (const std::size_t n : {2u, 20u, 150u}) {
        const PointCloud3 cloud = random_cloud(rng, n, 4.0);
        const std::vector<std::uint8_t> active(n, 1);
        std::vector<std::uint8_t> candidate(n, 1);
        std::vector<int> y;
        std::vector<double> best(n, 0.0);

        SUBCASE("empty Y") {}
        SUBCASE("non-empty Y") {
            y = {0, static_cast<int>(n - 1)};
            candidate[0] = 0;
            candidate[n - 1] = 0;
            for (auto& m : best) m = rng.uniform();
        }

        std::vector<double> serial, parallel;
        const ScoreParams sp;
        kernels::greedy_gains_serial(cloud, active, cloud, candidate, y, best, sp, serial);
        kernels::greedy_gains_parallel(cloud, active, cloud, candidate, y, best, sp, parallel);
        CHECK(serial == parallel);
    }
}

TEST_CASE("kmeans_assign serial and parallel agree bitwise") {
    Rng rng(303);
    std::vector<Point2> pts(777);
    for (auto& p : pts) p = {rng.uniform(-20, 20), rng.uniform(-20, 20)};
    std::vector<Point2> centroids(19);
    for (auto& c : centroids) c = {rng.uniform(-20, 20), rng.uniform(-20, 20)};

    std::vector<int> serial, parallel;
    kernels::kmeans_assign_serial(pts, centroids, serial);
    kernels::kmeans_assign_parallel(pts, centroids, parallel);
    CHECK(serial == parallel);
}

TEST_CASE("bin_assign serial and parallel agree bitwise") {
    Rng rng(404);
    std::vector<Point2> pts(5000);
    for (auto& p : pts) p = {rng.uniform(-20, 20), rng.uniform(-20, 20)};
    pts[17] = {1.5, -0.5}; // exactly the origin below

    std::vector<int> serial, parallel;
    kernels::bin_assign_serial(pts, {1.5, -0.5}, serial);
    kernels::bin_assign_parallel(pts, {1.5, -0.5}, parallel);
    CHECK(serial == parallel);
    CHECK(serial[17] == -1);
}

TEST_CASE("kmeans_assign breaks ties toward the smaller centroid index") {
    const std::vector<Point2> pts{{0.0, 0.0}};
    const std::vector<Point2> centroids{{1.0, 0.0}, {-1.0, 0.0}};
    std::vector<int> assign;
    kernels::kmeans_assign_serial(pts, centroids, assign);
    CHECK(assign[0] == 0);
}

TEST_CASE("bin_assign respects half-open bin boundaries") {
    const std::vector<Point2> pts{{1.0, 0.0}};
    std::vector<int> bins;
    kernels::bin_assign_serial(pts, {0.0, 0.0}, bins);
    CHECK(bins[0] == 0); // angle exactly 0 lands in bin 0
}

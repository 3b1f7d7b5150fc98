// Benchmark comparing the serial reference kernels against the OpenMP
// variants. Also asserts that both produce bitwise-identical outputs.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "explore/kernels.hpp"
#include "explore/rng.hpp"

using namespace explore;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn(); // warm up
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

PointCloud3 random_cloud(Rng& rng, std::size_t n, double extent) {
    PointCloud3 cloud(n);
    for (auto& p : cloud) {
        p = {rng.uniform(-extent, extent), rng.uniform(-extent, extent),
             rng.uniform(-extent, extent)};
    }
    return cloud;
}

std::vector<Point2> random_points(Rng& rng, std::size_t n, double extent) {
    std::vector<Point2> pts(n);
    for (auto& p : pts) p = {rng.uniform(-extent, extent), rng.uniform(-extent, extent)};
    return pts;
}

int failures = 0;

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-18s serial %8.3f ms   openmp %8.3f ms   speedup %5.2fx   bitwise %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, identical ? "OK" : "MISMATCH");
    if (!identical) ++failures;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; comparing the two code paths anyway\n");
#endif

    Rng rng(42);
    const ScoreParams sp;

    // best_rep_scores: 4000 points against 8 representatives.
    {
        const PointCloud3 cloud = random_cloud(rng, 4000, 10.0);
        const std::vector<std::uint8_t> active(cloud.size(), 1);
        const std::vector<int> reps{3, 77, 501, 999, 1500, 2222, 3000, 3999};
        std::vector<double> a, b;
        const double ts = time_ms(
            [&] { kernels::best_rep_scores_serial(cloud, active, cloud, reps, sp, a); }, 20);
        const double tp = time_ms(
            [&] { kernels::best_rep_scores_parallel(cloud, active, cloud, reps, sp, b); }, 20);
        report("best_rep_scores", ts, tp, a == b);
    }

    // greedy_gains: full candidate sweep on a 2000-point ground set.
    {
        const PointCloud3 cloud = random_cloud(rng, 2000, 10.0);
        const std::vector<std::uint8_t> active(cloud.size(), 1);
        const std::vector<std::uint8_t> candidate(cloud.size(), 1);
        const std::vector<int> y{10, 20, 30};
        std::vector<double> best(cloud.size(), 0.0);
        for (auto& m : best) m = rng.uniform();
        std::vector<double> a, b;
        const double ts = time_ms(
            [&] { kernels::greedy_gains_serial(cloud, active, cloud, candidate, y, best, sp, a); },
            5);
        const double tp = time_ms(
            [&] {
                kernels::greedy_gains_parallel(cloud, active, cloud, candidate, y, best, sp, b);
            },
            5);
        report("greedy_gains", ts, tp, a == b);
    }

    // kmeans_assign: 50000 points against 500 centroids.
    {
        const std::vector<Point2> pts = random_points(rng, 50000, 50.0);
        const std::vector<Point2> centroids = random_points(rng, 500, 50.0);
        std::vector<int> a, b;
        const double ts =
            time_ms([&] { kernels::kmeans_assign_serial(pts, centroids, a); }, 5);
        const double tp =
            time_ms([&] { kernels::kmeans_assign_parallel(pts, centroids, b); }, 5);
        report("kmeans_assign", ts, tp, a == b);
    }

    // bin_assign: 200000 points.
    {
        const std::vector<Point2> pts = random_points(rng, 200000, 50.0);
        const Point2 origin{1.0, -2.0};
        std::vector<int> a, b;
        const double ts = time_ms([&] { kernels::bin_assign_serial(pts, origin, a); }, 10);
        const double tp = time_ms([&] { kernels::bin_assign_parallel(pts, origin, b); }, 10);
        report("bin_assign", ts, tp, a == b);
    }

    return failures == 0 ? 0 : 1;
}

// OpenMP variants of the data-parallel kernels. Output elements are written
// independently and never reduced across threads, so results match the serial
// reference bitwise for any thread count.

#include <limits>

#include "explore/kernels.hpp"
#include "kernels_body.hpp"

namespace explore::kernels {

namespace {

// Below these sizes the fork/join overhead dominates; the dispatcher falls
// back to the serial reference. Results are identical either way.
constexpr std::size_t kMinParallelRows = 64;
constexpr std::size_t kMinParallelPoints = 2048;

bool have_openmp() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

} // namespace

void best_rep_scores_parallel(const PointCloud3& cloud, const std::vector<std::uint8_t>& active,
                              const PointCloud3& rep_cloud, const std::vector<int>& reps,
                              const ScoreParams& sp, std::vector<double>& out) {
    out.assign(cloud.size(), 0.0);
    const std::int64_t n = static_cast<std::int64_t>(cloud.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < n; ++v) {
        if (!active[static_cast<std::size_t>(v)]) continue;
        out[static_cast<std::size_t>(v)] =
            detail::best_rep_score_at(cloud, static_cast<std::size_t>(v), rep_cloud, reps, sp);
    }
}

void greedy_gains_parallel(const PointCloud3& n1, const std::vector<std::uint8_t>& active,
                           const PointCloud3& n2, const std::vector<std::uint8_t>& candidate,
                           const std::vector<int>& y, const std::vector<double>& current_best,
                           const ScoreParams& sp, std::vector<double>& out_gains) {
    out_gains.assign(n2.size(), -std::numeric_limits<double>::infinity());
    const std::int64_t n = static_cast<std::int64_t>(n2.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t u = 0; u < n; ++u) {
        if (!candidate[static_cast<std::size_t>(u)]) continue;
        out_gains[static_cast<std::size_t>(u)] = detail::greedy_gain_at(
            n1, active, n2, static_cast<std::size_t>(u), y, current_best, sp);
    }
}

void kmeans_assign_parallel(const std::vector<Point2>& points, const std::vector<Point2>& centroids,
                            std::vector<int>& out_assign) {
    out_assign.assign(points.size(), 0);
    const std::int64_t n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out_assign[static_cast<std::size_t>(i)] =
            detail::nearest_centroid_at(points, static_cast<std::size_t>(i), centroids);
    }
}

void bin_assign_parallel(const std::vector<Point2>& points, const Point2& origin,
                         std::vector<int>& out_bins) {
    out_bins.assign(points.size(), -1);
    const std::int64_t n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out_bins[static_cast<std::size_t>(i)] =
            detail::bin_index_at(points, static_cast<std::size_t>(i), origin);
    }
}

void best_rep_scores(const PointCloud3& cloud, const std::vector<std::uint8_t>& active,
                     const PointCloud3& rep_cloud, const std::vector<int>& reps,
                     const ScoreParams& sp, std::vector<double>& out, Exec exec) {
    const bool parallel = exec == Exec::parallel ||
                          (exec == Exec::automatic && have_openmp() && cloud.size() >= kMinParallelRows);
    if (parallel) {
        best_rep_scores_parallel(cloud, active, rep_cloud, reps, sp, out);
    } else {
        best_rep_scores_serial(cloud, active, rep_cloud, reps, sp, out);
    }
}

void greedy_gains(const PointCloud3& n1, const std::vector<std::uint8_t>& active,
                  const PointCloud3& n2, const std::vector<std::uint8_t>& candidate,
                  const std::vector<int>& y, const std::vector<double>& current_best,
                  const ScoreParams& sp, std::vector<double>& out_gains, Exec exec) {
    const bool parallel = exec == Exec::parallel ||
                          (exec == Exec::automatic && have_openmp() && n2.size() >= kMinParallelRows);
    if (parallel) {
        greedy_gains_parallel(n1, active, n2, candidate, y, current_best, sp, out_gains);
    } else {
        greedy_gains_serial(n1, active, n2, candidate, y, current_best, sp, out_gains);
    }
}

void kmeans_assign(const std::vector<Point2>& points, const std::vector<Point2>& centroids,
                   std::vector<int>& out_assign, Exec exec) {
    const bool parallel = exec == Exec::parallel ||
                          (exec == Exec::automatic && have_openmp() &&
                           points.size() * centroids.size() >= kMinParallelPoints);
    if (parallel) {
        kmeans_assign_parallel(points, centroids, out_assign);
    } else {
        kmeans_assign_serial(points, centroids, out_assign);
    }
}

void bin_assign(const std::vector<Point2>& points, const Point2& origin,
                std::vector<int>& out_bins, Exec exec) {
    const bool parallel = exec == Exec::parallel ||
                          (exec == Exec::automatic && have_openmp() && points.size() >= kMinParallelPoints);
    if (parallel) {
        bin_assign_parallel(points, origin, out_bins);
    } else {
        bin_assign_serial(points, origin, out_bins);
    }
}

} // namespace explore::kernels

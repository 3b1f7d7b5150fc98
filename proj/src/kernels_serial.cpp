#include <limits>

#include "explore/kernels.hpp"
#include "kernels_body.hpp"

namespace explore::kernels {

void best_rep_scores_serial(const PointCloud3& cloud, const std::vector<std::uint8_t>& active,
                            const PointCloud3& rep_cloud, const std::vector<int>& reps,
                            const ScoreParams& sp, std::vector<double>& out) {
    out.assign(cloud.size(), 0.0);
    for (std::size_t v = 0; v < cloud.size(); ++v) {
        if (!active[v]) continue;
        out[v] = detail::best_rep_score_at(cloud, v, rep_cloud, reps, sp);
    }
}

void greedy_gains_serial(const PointCloud3& n1, const std::vector<std::uint8_t>& active,
                         const PointCloud3& n2, const std::vector<std::uint8_t>& candidate,
                         const std::vector<int>& y, const std::vector<double>& current_best,
                         const ScoreParams& sp, std::vector<double>& out_gains) {
    out_gains.assign(n2.size(), -std::numeric_limits<double>::infinity());
    for (std::size_t u = 0; u < n2.size(); ++u) {
        if (!candidate[u]) continue;
        out_gains[u] = detail::greedy_gain_at(n1, active, n2, u, y, current_best, sp);
    }
}

void kmeans_assign_serial(const std::vector<Point2>& points, const std::vector<Point2>& centroids,
                          std::vector<int>& out_assign) {
    out_assign.assign(points.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        out_assign[i] = detail::nearest_centroid_at(points, i, centroids);
    }
}

void bin_assign_serial(const std::vector<Point2>& points, const Point2& origin,
                       std::vector<int>& out_bins) {
    out_bins.assign(points.size(), -1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        out_bins[i] = detail::bin_index_at(points, i, origin);
    }
}

} // namespace explore::kernels

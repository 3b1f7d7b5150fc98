// Per-element kernel bodies shared by the serial reference and the OpenMP
// variants. Both variants must run exactly this code per element so their
// outputs stay bitwise identical.

#ifndef EXPLORE_SRC_KERNELS_BODY_HPP_
#define EXPLORE_SRC_KERNELS_BODY_HPP_

#include <cstddef>
#include <limits>
#include <vector>

#include "explore/geometry.hpp"

namespace explore::kernels::detail {

inline double best_rep_score_at(const PointCloud3& cloud, std::size_t v,
                                const PointCloud3& rep_cloud, const std::vector<int>& reps,
                                const ScoreParams& sp) {
    double best = -std::numeric_limits<double>::infinity();
    for (const int u : reps) {
        const double s = distance_score(rep_cloud[static_cast<std::size_t>(u)], cloud[v], sp);
        if (s > best) best = s;
    }
    return best;
}

inline double greedy_gain_at(const PointCloud3& n1, const std::vector<std::uint8_t>& active,
                             const PointCloud3& n2, std::size_t u, const std::vector<int>& y,
                             const std::vector<double>& current_best, const ScoreParams& sp) {
    const Point3& pu = n2[u];
    double facility = 0.0;
    if (y.empty()) {
        for (std::size_t v = 0; v < n1.size(); ++v) {
            if (!active[v]) continue;
            facility += distance_score(pu, n1[v], sp);
        }
    } else {
        for (std::size_t v = 0; v < n1.size(); ++v) {
            if (!active[v]) continue;
            const double s = distance_score(pu, n1[v], sp);
            if (s > current_best[v]) facility += s - current_best[v];
        }
    }
    double pair_sum = distance_score(pu, pu, sp);
    for (const int w : y) {
        pair_sum += 2.0 * distance_score(pu, n2[static_cast<std::size_t>(w)], sp);
    }
    return facility - pair_sum / static_cast<double>(n2.size());
}

inline int nearest_centroid_at(const std::vector<Point2>& points, std::size_t i,
                               const std::vector<Point2>& centroids) {
    int best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        const double du = points[i].u - centroids[c].u;
        const double dv = points[i].v - centroids[c].v;
        const double d2 = du * du + dv * dv;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = static_cast<int>(c);
        }
    }
    return best;
}

inline int bin_index_at(const std::vector<Point2>& points, std::size_t i, const Point2& origin) {
    const Point2 d = points[i] - origin;
    if (norm(d) < 1e-12) return -1;
    double a = std::atan2(d.v, d.u);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    int bin = static_cast<int>(a / (kTwoPi / 360.0));
    if (bin > 359) bin = 359;
    return bin;
}

} // namespace explore::kernels::detail

#endif // EXPLORE_SRC_KERNELS_BODY_HPP_

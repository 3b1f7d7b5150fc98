#ifndef EXPLORE_OBSTACLES_HPP_
#define EXPLORE_OBSTACLES_HPP_

#include <cstdint>
#include <vector>

#include "explore/geometry.hpp"
#include "explore/kernels.hpp"

namespace explore {

struct ObstacleParams {
    int clusters = 1000;     ///< K, the k-means cluster count (upper bound)
    double margin = 0.0;     ///< outward hull inflation, map units
    int max_iters = 100;     ///< Lloyd iteration cap
    std::uint64_t seed = 0;  ///< reserved for seeded variants; the default seeding is deterministic
};

/// Counterclockwise convex polygon with a cached bounding box.
struct ConvexPolygon {
    std::vector<Point2> vertices;
    Point2 bbox_min;
    Point2 bbox_max;
};

struct Cluster {
    Point2 centroid;
    std::vector<int> members; ///< indices into the clustered point list, ascending
};

struct ObstacleSet {
    std::vector<ConvexPolygon> polygons;
    std::vector<int> provenance; ///< source cluster index per polygon
};

/// Builds a polygon from CCW vertices, filling the bounding box.
ConvexPolygon make_polygon(std::vector<Point2> vertices);

/// True when p lies inside or on the polygon boundary.
bool point_in_polygon(const ConvexPolygon& poly, const Point2& p);

/// Lloyd's k-means with deterministic farthest-point seeding from the
/// lowest-index point. Runs until the assignment reaches a fixpoint or
/// max_iters. Empty clusters are dropped; with K >= |points| every point gets
/// its own cluster.
std::vector<Cluster> kmeans(const std::vector<Point2>& points, const ObstacleParams& params,
                            kernels::Exec exec = kernels::Exec::automatic);

/// Monotone-chain hull of the cluster, inflated outward by margin. Degenerate
/// clusters blow up to a square (single point) or a thickened rectangle
/// (collinear points) of half-width max(margin, 1e-3).
ConvexPolygon convex_hull(const std::vector<Point2>& cluster, double margin);

/// Clusters the projected cloud and hulls each cluster.
ObstacleSet build_obstacles(const std::vector<Point2>& cloud2d, const ObstacleParams& params,
                            kernels::Exec exec = kernels::Exec::automatic);

} // namespace explore

#endif // EXPLORE_OBSTACLES_HPP_

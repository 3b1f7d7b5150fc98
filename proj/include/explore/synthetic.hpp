#ifndef EXPLORE_SYNTHETIC_HPP_
#define EXPLORE_SYNTHETIC_HPP_

#include <cstdint>
#include <vector>

#include "explore/geometry.hpp"
#include "explore/outliers.hpp"

namespace explore {

/// Fixture generators for experiments and calibration runs.

struct PlantedCloud {
    PointCloud3 points;      ///< inliers first, then the planted outliers
    IndexSet true_outliers;  ///< indices of the planted points
};

/// A dense cluster inside the unit ball plus far-away planted outliers
/// scattered at radii in [min_radius, max_radius].
PlantedCloud planted_outlier_cloud(std::uint64_t seed, int n_inliers = 200, int n_outliers = 20,
                                   double min_radius = 10.0, double max_radius = 15.0);

struct RingRoom {
    std::vector<Point2> points;   ///< wall ring around the origin with a door gap
    double door_start_deg = 0.0;  ///< door interval start, degrees
    double door_width_deg = 0.0;
    double mean_radius = 0.0;     ///< exact mean point norm
};

/// A circular wall of points around the origin with one doorway gap: every
/// non-door degree bin holds points_per_degree samples, door bins hold none.
RingRoom ring_room(std::uint64_t seed, double door_start_deg, double door_width_deg,
                   double radius_lo = 4.0, double radius_hi = 6.0, int points_per_degree = 3);

} // namespace explore

#endif // EXPLORE_SYNTHETIC_HPP_

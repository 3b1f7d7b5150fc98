#ifndef EXPLORE_EXIT_FINDER_HPP_
#define EXPLORE_EXIT_FINDER_HPP_

#include <utility>
#include <vector>

#include "explore/geometry.hpp"
#include "explore/kernels.hpp"

namespace explore {

/// One-degree sector of directions around the agent.
struct AngularBin {
    int index = 0;                ///< bin number in [0, 359]
    std::vector<Point2> members;  ///< projected points whose angle falls in the bin
};

/// A covered one-degree interval and the mean range of its points.
struct CoveredInterval {
    double start = 0.0; ///< radians
    double end = 0.0;   ///< radians
    double d_hat = 0.0; ///< mean distance from the agent to the bin's points
};

/// The range map of Exit-Finder: covered intervals plus the mean point norm r.
struct AngularMap {
    std::vector<CoveredInterval> covered;
    double r = 0.0;
};

/// Maximal uncovered arc. `end` may exceed 2*pi when the arc wraps through 0.
struct GapSegment {
    double start = 0.0;
    double end = 0.0;
    double midpoint = 0.0; ///< circular midpoint, in [0, 2*pi)
};

struct ExitPoint {
    Point2 point2;      ///< exit in plane coordinates
    Point3 point3;      ///< exit lifted back to 3D
    double angle = 0.0; ///< gap midpoint, radians
    double range = 0.0; ///< distance from the projected agent position
};

struct ExitParams {
    bool circular_gap = true;  ///< merge uncovered arcs across the 0/2pi seam
    bool r_from_agent = false; ///< measure r from the agent instead of the plane origin
};

/// Assigns each projected point to one of 360 one-degree bins by its angle
/// around x2d and returns the mean norm r over the assigned points. Points
/// coincident with x2d are skipped. By default r uses the norm from the plane
/// origin; r_from_agent switches to the distance from x2d.
std::pair<std::vector<AngularBin>, double> bin_points(
    const std::vector<Point2>& m2d, const Point2& x2d, bool r_from_agent = false,
    kernels::Exec exec = kernels::Exec::automatic);

/// Marks the intervals of bins holding more than one point as covered, with
/// the mean agent distance of each.
AngularMap build_angular_map(const std::vector<AngularBin>& bins, const Point2& x2d, double r);

/// Longest maximal uncovered arc of the map; ties break to the smallest start
/// angle. With circular gap merging (the default) arcs join across 0/2pi.
GapSegment largest_gap(const AngularMap& map, bool circular = true);

/// Whole Exit-Finder pipeline: project, bin, map, find the widest gap, and
/// emit the exit point at distance r along the gap midpoint.
ExitPoint find_exit(const PointCloud3& m3d, const Point3& x3d, const AffinePlane& plane,
                    const ExitParams& params = {},
                    kernels::Exec exec = kernels::Exec::automatic);

/// find_exit on already-projected data, also exposing the angular map.
ExitPoint find_exit_2d(const std::vector<Point2>& m2d, const Point2& x2d,
                       const AffinePlane& plane, const ExitParams& params,
                       AngularMap* out_map = nullptr,
                       kernels::Exec exec = kernels::Exec::automatic);

} // namespace explore

#endif // EXPLORE_EXIT_FINDER_HPP_

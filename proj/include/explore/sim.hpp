#ifndef EXPLORE_SIM_HPP_
#define EXPLORE_SIM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "explore/exit_finder.hpp"
#include "explore/geometry.hpp"
#include "explore/obstacles.hpp"
#include "explore/outliers.hpp"
#include "explore/planner.hpp"

namespace explore {

struct RoomSpec {
    Point2 min;
    Point2 max;
};

struct DoorwaySpec {
    int wall = 0;        ///< wall id: room_index * 4 + side (0 bottom, 1 right, 2 top, 3 left)
    double offset = 0.0; ///< distance from the wall's start corner
    double width = 0.0;
};

struct EnvironmentSpec {
    std::vector<RoomSpec> rooms;
    std::vector<DoorwaySpec> doorways;
    double feature_density = 8.0;  ///< sampled feature points per unit wall length
    double outlier_rate = 0.0;     ///< spurious points per wall point, in expectation
    double outlier_radius = 5.0;   ///< spurious points scatter within this 3D radius of the agent
    double sensor_noise = 0.0;     ///< per-coordinate Gaussian jitter stddev
    std::uint64_t seed = 0;
    Point2 start{0.0, 0.0};
    double flight_height = 1.0;
};

struct WallSegment {
    Point2 a;
    Point2 b;
};

struct Environment {
    std::vector<WallSegment> walls; ///< post-cutout segments
    Point2 bbox_min;
    Point2 bbox_max;
    AffinePlane flight_plane;
    Point3 start;
};

struct VisitedSector {
    Point2 center;
    double radius = 0.0;
};

struct AgentState {
    Point3 position;
    AffinePlane plane;
    std::vector<VisitedSector> visited_sectors;
};

/// A cloud plus the index where appended closure points begin; closure points
/// mask visited directions and never feed obstacle synthesis.
struct MaskedCloud {
    PointCloud3 points;
    std::size_t closure_begin = 0;
};

struct SimParams {
    OutlierParams outlier;
    ExitParams exit;
    ObstacleParams obstacle;
    PlannerParams planner;
    double sector_radius_scale = 1.0; ///< visited-sector radius as a fraction of the map's r
    int max_iterations = 20;
};

struct IterationRecord {
    int iteration = 0;
    Point3 pose;
    PointCloud3 raw_cloud;
    IndexSet inliers;
    IndexSet outliers;
    std::size_t closure_points = 0;
    AngularMap angular_map;
    ExitPoint exit;
    Path raw_path;
    Path refined_path;
};

struct EpisodeLog {
    std::vector<IterationRecord> iterations;
    std::string termination; ///< "exit-reached", "no-exit", "cap", or "planning-failed"
    Point3 final_pose;
};

/// Builds wall segments with doorway cutouts and the flight plane. The plane
/// comes from three points traced at flight height around the start position,
/// mirroring the triangular calibration flight.
Environment generate_env(const EnvironmentSpec& spec);

/// Simulated panoramic scan: visible wall points at feature_density with
/// Gaussian jitter, plus spurious outlier points scattered around the agent.
/// Deterministic per (spec.seed, iteration).
PointCloud3 observe(const Environment& env, const AgentState& agent, const EnvironmentSpec& spec,
                    int iteration);

/// Appends closure points along the boundary circles of previously visited
/// sectors so the angular map reads those directions as covered.
MaskedCloud mask_visited(const PointCloud3& cloud, const AgentState& agent);

/// Closed-loop exploration: scan, clean, mask, find an exit, synthesize
/// obstacles, plan, refine, and move, until no gap remains, the agent leaves
/// the environment's bounding box, or the iteration cap is hit.
EpisodeLog run_exploration(const Environment& env, const EnvironmentSpec& spec,
                           const SimParams& params);

} // namespace explore

#endif // EXPLORE_SIM_HPP_

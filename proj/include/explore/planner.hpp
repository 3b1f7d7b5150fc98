#ifndef EXPLORE_PLANNER_HPP_
#define EXPLORE_PLANNER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "explore/geometry.hpp"
#include "explore/obstacles.hpp"

namespace explore {

struct SamplingBounds {
    Point2 min;
    Point2 max;
};

struct PlannerParams {
    double step_size = 0.3;
    double goal_bias = 0.1;
    double goal_tolerance = 0.6;
    int max_iters = 10000;
    std::optional<SamplingBounds> bounds; ///< defaults to the scene bounding box inflated by 10%
    std::uint64_t seed = 0;
};

struct Path {
    std::vector<Point2> waypoints;
    double length = 0.0;
};

/// Sum of Euclidean edge lengths, accumulated front to back.
double path_length(const std::vector<Point2>& waypoints);

/// True when the closed segment [a,b] touches the interior or boundary of any
/// polygon; an endpoint inside a polygon counts.
bool segment_collides(const Point2& a, const Point2& b, const ObstacleSet& obstacles);

/// Plain RRT: grow a tree from start by extending the nearest node at most
/// step_size toward each sample (the goal with probability goal_bias), keeping
/// collision-free edges, until a node lands within goal_tolerance of the goal.
/// Deterministic for a fixed seed. Throws PlanningFailureError at max_iters.
Path rrt_plan(const Point2& start, const Point2& goal, const ObstacleSet& obstacles,
              const PlannerParams& params);

/// Greedy farthest-first shortcutting to a fixpoint: from each waypoint, jump
/// straight to the farthest later waypoint reachable without collision.
/// Endpoints never move and the result is never longer than the input.
Path shortcut_refine(const Path& path, const ObstacleSet& obstacles);

} // namespace explore

#endif // EXPLORE_PLANNER_HPP_

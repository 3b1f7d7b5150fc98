#ifndef EXPLORE_SVG_HPP_
#define EXPLORE_SVG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "explore/exit_finder.hpp"
#include "explore/geometry.hpp"
#include "explore/obstacles.hpp"
#include "explore/planner.hpp"
#include "explore/sim.hpp"

namespace explore {

/// Everything a still render can show; unset members are simply not drawn.
/// Colors: blue feature points, red agent marker, green per-bin range rays,
/// yellow X at the exit, gray obstacle polygons, indigo path polylines.
struct RenderScene {
    std::vector<Point2> points;
    std::optional<Point2> agent;
    std::optional<AngularMap> map;
    std::optional<Point2> exit;
    const ObstacleSet* obstacles = nullptr;
    const Path* raw_path = nullptr;
    const Path* refined_path = nullptr;
};

/// Deterministic standalone SVG document; identical scenes yield identical bytes.
std::string render_svg(const RenderScene& scene);

/// Summary render of a whole episode: per-iteration clouds, poses, exits, and
/// one refined-path polyline per iteration, all projected on the flight plane.
std::string render_episode_svg(const EpisodeLog& log, const AffinePlane& plane);

} // namespace explore

#endif // EXPLORE_SVG_HPP_

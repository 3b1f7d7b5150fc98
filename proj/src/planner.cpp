#include "explore/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "explore/errors.hpp"
#include "explore/rng.hpp"

namespace explore {

double path_length(const std::vector<Point2>& waypoints) {
    double len = 0.0;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        len += distance(waypoints[i - 1], waypoints[i]);
    }
    return len;
}

bool segment_collides(const Point2& a, const Point2& b, const ObstacleSet& obstacles) {
    const double seg_min_u = std::min(a.u, b.u);
    const double seg_max_u = std::max(a.u, b.u);
    const double seg_min_v = std::min(a.v, b.v);
    const double seg_max_v = std::max(a.v, b.v);
    for (const auto& poly : obstacles.polygons) {
        if (seg_max_u < poly.bbox_min.u || seg_min_u > poly.bbox_max.u ||
            seg_max_v < poly.bbox_min.v || seg_min_v > poly.bbox_max.v) {
            continue;
        }
        if (point_in_polygon(poly, a) || point_in_polygon(poly, b)) return true;
        const auto& vs = poly.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (segments_intersect(a, b, vs[i], vs[(i + 1) % vs.size()])) return true;
        }
    }
    return false;
}

namespace {

SamplingBounds default_bounds(const Point2& start, const Point2& goal,
                              const ObstacleSet& obstacles) {
    Point2 lo{std::min(start.u, goal.u), std::min(start.v, goal.v)};
    Point2 hi{std::max(start.u, goal.u), std::max(start.v, goal.v)};
    for (const auto& poly : obstacles.polygons) {
        lo.u = std::min(lo.u, poly.bbox_min.u);
        lo.v = std::min(lo.v, poly.bbox_min.v);
        hi.u = std::max(hi.u, poly.bbox_max.u);
        hi.v = std::max(hi.v, poly.bbox_max.v);
    }
    const double pad_u = 0.1 * std::max(hi.u - lo.u, 1e-6);
    const double pad_v = 0.1 * std::max(hi.v - lo.v, 1e-6);
    return {{lo.u - pad_u, lo.v - pad_v}, {hi.u + pad_u, hi.v + pad_v}};
}

} // namespace

Path rrt_plan(const Point2& start, const Point2& goal, const ObstacleSet& obstacles,
              const PlannerParams& params) {
    if (segment_collides(start, start, obstacles)) {
        throw PlanningFailureError("rrt_plan: start position is inside an obstacle");
    }
    if (distance(start, goal) <= params.goal_tolerance) {
        return Path{{start}, 0.0};
    }

    const SamplingBounds bounds =
        params.bounds ? *params.bounds : default_bounds(start, goal, obstacles);
    Rng rng(params.seed);

    std::vector<Point2> nodes{start};
    std::vector<int> parent{-1};

    for (int iter = 0; iter < params.max_iters; ++iter) {
        Point2 sample;
        if (rng.uniform() < params.goal_bias) {
            sample = goal;
        } else {
            sample = {rng.uniform(bounds.min.u, bounds.max.u),
                      rng.uniform(bounds.min.v, bounds.max.v)};
        }

        std::size_t nearest = 0;
        double nearest_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double du = nodes[i].u - sample.u;
            const double dv = nodes[i].v - sample.v;
            const double d2 = du * du + dv * dv;
            if (d2 < nearest_d2) {
                nearest_d2 = d2;
                nearest = i;
            }
        }
        const double d = std::sqrt(nearest_d2);
        if (d < 1e-12) continue;
        const Point2 candidate =
            d <= params.step_size
                ? sample
                : nodes[nearest] + (sample - nodes[nearest]) * (params.step_size / d);

        if (segment_collides(nodes[nearest], candidate, obstacles)) continue;
        nodes.push_back(candidate);
        parent.push_back(static_cast<int>(nearest));

        if (distance(candidate, goal) <= params.goal_tolerance) {
            std::vector<Point2> waypoints;
            for (int i = static_cast<int>(nodes.size()) - 1; i >= 0;
                 i = parent[static_cast<std::size_t>(i)]) {
                waypoints.push_back(nodes[static_cast<std::size_t>(i)]);
            }
            std::reverse(waypoints.begin(), waypoints.end());
            const double len = path_length(waypoints);
            return Path{std::move(waypoints), len};
        }
    }
    throw PlanningFailureError("rrt_plan: no path within " + std::to_string(params.max_iters) +
                               " iterations");
}

Path shortcut_refine(const Path& path, const ObstacleSet& obstacles) {
    std::vector<Point2> wps = path.waypoints;
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t i = 0;
        while (i + 2 < wps.size()) {
            // Farthest reachable waypoint first.
            for (std::size_t j = wps.size() - 1; j > i + 1; --j) {
                if (!segment_collides(wps[i], wps[j], obstacles)) {
                    wps.erase(wps.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                              wps.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                    break;
                }
            }
            ++i;
        }
    }
    const double len = path_length(wps);
    return Path{std::move(wps), len};
}

} // namespace explore

#include "explore/sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "explore/errors.hpp"
#include "explore/rng.hpp"

namespace explore {

namespace {

constexpr int kClosureSamplesPerCircle = 1440; // four per degree of arc

std::array<Point2, 4> room_corners(const RoomSpec& room) {
    return {Point2{room.min.u, room.min.v}, Point2{room.max.u, room.min.v},
            Point2{room.max.u, room.max.v}, Point2{room.min.u, room.max.v}};
}

WallSegment wall_of(const RoomSpec& room, int side) {
    const auto c = room_corners(room);
    return {c[static_cast<std::size_t>(side)], c[static_cast<std::size_t>((side + 1) % 4)]};
}

/// Intersection parameter of ray a->b with segment [c,d], or -1 when they
/// miss. Parallel pairs are treated as a miss.
double ray_hit_param(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const Point2 r = b - a;
    const Point2 s = d - c;
    const double denom = r.u * s.v - r.v * s.u;
    if (denom == 0.0) return -1.0;
    const Point2 ac = c - a;
    const double t = (ac.u * s.v - ac.v * s.u) / denom;
    const double w = (ac.u * r.v - ac.v * r.u) / denom;
    if (w < -1e-12 || w > 1.0 + 1e-12) return -1.0;
    return t;
}

bool line_of_sight_blocked(const Point2& agent, const Point2& target,
                           const std::vector<WallSegment>& walls, std::size_t skip) {
    for (std::size_t i = 0; i < walls.size(); ++i) {
        if (i == skip) continue;
        const double t = ray_hit_param(agent, target, walls[i].a, walls[i].b);
        if (t > 1e-9 && t < 1.0 - 1e-9) return true;
    }
    return false;
}

} // namespace

Environment generate_env(const EnvironmentSpec& spec) {
    if (spec.rooms.empty()) throw InvalidSpecError("generate_env: no rooms");
    if (spec.feature_density < 0.0 || spec.outlier_rate < 0.0 || spec.sensor_noise < 0.0 ||
        spec.outlier_radius < 0.0) {
        throw InvalidSpecError("generate_env: negative density, rate, noise, or radius");
    }
    for (const auto& room : spec.rooms) {
        if (room.min.u >= room.max.u || room.min.v >= room.max.v) {
            throw InvalidSpecError("generate_env: room with non-positive extent");
        }
    }

    // Doorway cut intervals per wall id.
    std::vector<std::vector<std::pair<double, double>>> cuts(spec.rooms.size() * 4);
    for (const auto& door : spec.doorways) {
        if (door.wall < 0 || static_cast<std::size_t>(door.wall) >= cuts.size()) {
            throw InvalidSpecError("generate_env: doorway wall id out of range");
        }
        const WallSegment w = wall_of(spec.rooms[static_cast<std::size_t>(door.wall) / 4],
                                      door.wall % 4);
        const double len = distance(w.a, w.b);
        if (door.width <= 0.0 || door.offset < 0.0 || door.offset + door.width > len) {
            throw InvalidSpecError("generate_env: doorway outside its wall");
        }
        cuts[static_cast<std::size_t>(door.wall)].emplace_back(door.offset,
                                                               door.offset + door.width);
    }

    Environment env;
    for (std::size_t room_i = 0; room_i < spec.rooms.size(); ++room_i) {
        for (int side = 0; side < 4; ++side) {
            const WallSegment w = wall_of(spec.rooms[room_i], side);
            const double len = distance(w.a, w.b);
            const Point2 dir = (w.b - w.a) * (1.0 / len);

            auto& wall_cuts = cuts[room_i * 4 + static_cast<std::size_t>(side)];
            std::sort(wall_cuts.begin(), wall_cuts.end());
            double pos = 0.0;
            for (const auto& [lo, hi] : wall_cuts) {
                if (lo - pos > 1e-9) {
                    env.walls.push_back({w.a + dir * pos, w.a + dir * lo});
                }
                pos = std::max(pos, hi);
            }
            if (len - pos > 1e-9) {
                env.walls.push_back({w.a + dir * pos, w.a + dir * len});
            }
        }
    }

    env.bbox_min = spec.rooms[0].min;
    env.bbox_max = spec.rooms[0].max;
    for (const auto& room : spec.rooms) {
        env.bbox_min.u = std::min(env.bbox_min.u, room.min.u);
        env.bbox_min.v = std::min(env.bbox_min.v, room.min.v);
        env.bbox_max.u = std::max(env.bbox_max.u, room.max.u);
        env.bbox_max.v = std::max(env.bbox_max.v, room.max.v);
    }

    // The calibration flight: three points at flight height around the start.
    const Point3 p1{spec.start.u, spec.start.v, spec.flight_height};
    const Point3 p2{spec.start.u + 1.0, spec.start.v, spec.flight_height};
    const Point3 p3{spec.start.u, spec.start.v + 1.0, spec.flight_height};
    env.flight_plane = plane_from_three_points(p1, p2, p3);
    env.start = p1;
    return env;
}

PointCloud3 observe(const Environment& env, const AgentState& agent, const EnvironmentSpec& spec,
                    int iteration) {
    Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(iteration)));
    const Point2 agent2{agent.position.x, agent.position.y};

    PointCloud3 wall_points;
    PointCloud3 spurious;
    for (std::size_t wi = 0; wi < env.walls.size(); ++wi) {
        const WallSegment& w = env.walls[wi];
        const double len = distance(w.a, w.b);
        const long samples = std::lround(len * spec.feature_density);
        for (long s = 0; s < samples; ++s) {
            const double t = rng.uniform();
            const Point2 q = w.a + (w.b - w.a) * t;
            if (line_of_sight_blocked(agent2, q, env.walls, wi)) continue;

            Point3 p{q.u, q.v, spec.flight_height};
            if (spec.sensor_noise > 0.0) {
                p.x += rng.gaussian(0.0, spec.sensor_noise);
                p.y += rng.gaussian(0.0, spec.sensor_noise);
                p.z += rng.gaussian(0.0, spec.sensor_noise);
            }
            wall_points.push_back(p);

            if (spec.outlier_rate > 0.0 && rng.uniform() < spec.outlier_rate) {
                Point3 dir{rng.gaussian(), rng.gaussian(), rng.gaussian()};
                const double dn = norm(dir);
                if (dn > 0.0) {
                    const double radius = spec.outlier_radius * std::cbrt(rng.uniform());
                    spurious.push_back(agent.position + dir * (radius / dn));
                }
            }
        }
    }

    wall_points.insert(wall_points.end(), spurious.begin(), spurious.end());
    return wall_points;
}

MaskedCloud mask_visited(const PointCloud3& cloud, const AgentState& agent) {
    MaskedCloud out;
    out.points = cloud;
    out.closure_begin = cloud.size();
    for (const auto& sector : agent.visited_sectors) {
        for (int j = 0; j < kClosureSamplesPerCircle; ++j) {
            const double theta = kTwoPi * static_cast<double>(j) /
                                 static_cast<double>(kClosureSamplesPerCircle);
            const Point2 p = sector.center +
                             Point2{sector.radius * std::cos(theta), sector.radius * std::sin(theta)};
            out.points.push_back(lift_from_plane(agent.plane, p));
        }
    }
    return out;
}

EpisodeLog run_exploration(const Environment& env, const EnvironmentSpec& spec,
                           const SimParams& params) {
    EpisodeLog log;
    AgentState agent{env.start, env.flight_plane, {}};
    if (agent.position.x < env.bbox_min.u || agent.position.x > env.bbox_max.u ||
        agent.position.y < env.bbox_min.v || agent.position.y > env.bbox_max.v) {
        throw InvalidSpecError("run_exploration: start pose outside the environment");
    }

    log.termination = "cap";
    for (int iter = 1; iter <= params.max_iterations; ++iter) {
        IterationRecord rec;
        rec.iteration = iter;
        rec.pose = agent.position;
        rec.raw_cloud = observe(env, agent, spec, iter);
        if (rec.raw_cloud.empty()) {
            log.termination = "no-exit";
            break;
        }

        const OutlierResult clean = remove_outliers(rec.raw_cloud, params.outlier);
        rec.inliers = clean.inliers;
        rec.outliers = clean.outliers;

        PointCloud3 inlier_cloud;
        inlier_cloud.reserve(clean.inliers.size());
        for (const int i : clean.inliers) {
            inlier_cloud.push_back(rec.raw_cloud[static_cast<std::size_t>(i)]);
        }

        const MaskedCloud masked = mask_visited(inlier_cloud, agent);
        rec.closure_points = masked.points.size() - masked.closure_begin;

        std::vector<Point2> m2d;
        m2d.reserve(masked.points.size());
        for (const auto& p : masked.points) m2d.push_back(project_point(agent.plane, p));
        const Point2 x2d = project_point(agent.plane, agent.position);

        try {
            rec.exit = find_exit_2d(m2d, x2d, agent.plane, params.exit, &rec.angular_map);
        } catch (const NoGapError&) {
            log.termination = "no-exit";
            break;
        } catch (const EmptyInputError&) {
            log.termination = "no-exit";
            break;
        }

        const std::vector<Point2> obstacle_points(m2d.begin(),
                                                  m2d.begin() + static_cast<std::ptrdiff_t>(
                                                                    masked.closure_begin));
        const ObstacleSet obstacles = build_obstacles(obstacle_points, params.obstacle);

        PlannerParams planner = params.planner;
        planner.seed = mix_seed(params.planner.seed, static_cast<std::uint64_t>(iter));
        try {
            rec.raw_path = rrt_plan(x2d, rec.exit.point2, obstacles, planner);
        } catch (const PlanningFailureError&) {
            log.termination = "planning-failed";
            break;
        }
        rec.refined_path = shortcut_refine(rec.raw_path, obstacles);

        agent.visited_sectors.push_back(
            {x2d, rec.angular_map.r * params.sector_radius_scale});
        const Point2 new2 = rec.refined_path.waypoints.back();
        agent.position = lift_from_plane(agent.plane, new2);
        log.iterations.push_back(std::move(rec));

        if (agent.position.x < env.bbox_min.u || agent.position.x > env.bbox_max.u ||
            agent.position.y < env.bbox_min.v || agent.position.y > env.bbox_max.v) {
            log.termination = "exit-reached";
            break;
        }
    }

    log.final_pose = agent.position;
    return log;
}

} // namespace explore

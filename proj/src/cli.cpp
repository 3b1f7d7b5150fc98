#include "explore/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "explore/errors.hpp"
#include "explore/io.hpp"
#include "explore/rng.hpp"
#include "explore/svg.hpp"

namespace explore {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, std::size_t n, const std::string& what) {
    std::vector<double> vals;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string field =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            vals.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw UsageError(what + ": expected " + std::to_string(n) + " comma-separated reals");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (vals.size() != n) {
        throw UsageError(what + ": expected " + std::to_string(n) + " comma-separated reals");
    }
    return vals;
}

Point2 parse_point2(const std::string& text, const std::string& what) {
    const auto v = parse_reals(text, 2, what);
    return {v[0], v[1]};
}

Point3 parse_point3(const std::string& text, const std::string& what) {
    const auto v = parse_reals(text, 3, what);
    return {v[0], v[1], v[2]};
}

/// Config plumbing shared by the pipeline subcommands: optional config file
/// plus individual flag overrides.
struct ConfigOptions {
    std::string config_path;
    CLI::App* cmd = nullptr;

    double lambda = 0.0;
    int k = 0;
    double beta = 0.0;
    double epsilon = 0.0;
    bool normalize = false;
    bool no_normalize = false;
    bool circular_gap = false;
    bool no_circular_gap = false;
    bool r_from_agent = false;
    int clusters = 0;
    double margin = 0.0;
    double step_size = 0.0;
    double goal_bias = 0.0;
    double goal_tolerance = 0.0;
    int planner_iters = 0;

    void attach(CLI::App* app) {
        cmd = app;
        app->add_option("--config", config_path, "pipeline config JSON");
        app->add_option("--lambda", lambda, "outlier-count weight");
        app->add_option("--k-reps", k, "representative set size bound");
        app->add_option("--beta", beta, "grown-set weight in the X minimization");
        app->add_option("--epsilon", epsilon, "coincidence threshold of the distance score");
        app->add_flag("--normalize", normalize, "rescale to unit median pairwise distance");
        app->add_flag("--no-normalize", no_normalize, "disable normalization");
        app->add_flag("--circular-gap", circular_gap, "merge angular gaps across 0/2pi");
        app->add_flag("--no-circular-gap", no_circular_gap, "keep the gap search non-circular");
        app->add_flag("--r-from-agent", r_from_agent, "measure r from the agent, not the origin");
        app->add_option("--clusters", clusters, "k-means cluster count K");
        app->add_option("--margin", margin, "obstacle hull inflation");
        app->add_option("--step-size", step_size, "RRT extension length");
        app->add_option("--goal-bias", goal_bias, "RRT goal sampling probability");
        app->add_option("--goal-tolerance", goal_tolerance, "RRT goal acceptance radius");
        app->add_option("--planner-iters", planner_iters, "RRT iteration cap");
    }

    PipelineConfig resolve() const {
        PipelineConfig cfg;
        if (!config_path.empty()) cfg = parse_config_file(config_path);
        if (cmd->count("--lambda")) cfg.outlier.lambda = lambda;
        if (cmd->count("--k-reps")) cfg.outlier.k = k;
        if (cmd->count("--beta")) cfg.outlier.beta = beta;
        if (cmd->count("--epsilon")) cfg.outlier.score.epsilon = epsilon;
        if (cmd->count("--normalize")) cfg.outlier.score.normalize = true;
        if (cmd->count("--no-normalize")) cfg.outlier.score.normalize = false;
        if (cmd->count("--circular-gap")) cfg.exit.circular_gap = true;
        if (cmd->count("--no-circular-gap")) cfg.exit.circular_gap = false;
        if (cmd->count("--r-from-agent")) cfg.exit.r_from_agent = true;
        if (cmd->count("--clusters")) cfg.obstacle.clusters = clusters;
        if (cmd->count("--margin")) cfg.obstacle.margin = margin;
        if (cmd->count("--step-size")) cfg.planner.step_size = step_size;
        if (cmd->count("--goal-bias")) cfg.planner.goal_bias = goal_bias;
        if (cmd->count("--goal-tolerance")) cfg.planner.goal_tolerance = goal_tolerance;
        if (cmd->count("--planner-iters")) cfg.planner.max_iters = planner_iters;
        return cfg;
    }
};

AffinePlane plane_from_options(const std::string& plane_path,
                               const std::vector<std::string>& tri) {
    if (!plane_path.empty() && !tri.empty()) {
        throw UsageError("give either --plane or --tri, not both");
    }
    if (!plane_path.empty()) return parse_plane_file(plane_path);
    if (tri.size() == 3) {
        return plane_from_three_points(parse_point3(tri[0], "--tri p1"),
                                       parse_point3(tri[1], "--tri p2"),
                                       parse_point3(tri[2], "--tri p3"));
    }
    throw UsageError("a plane is required: --plane FILE or --tri p1 p2 p3");
}

std::string serialize_waypoints(const Path& path) {
    std::string out = "# format_version=1\nu,v\n";
    char buf[96];
    for (const auto& w : path.waypoints) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", w.u, w.v);
        out += buf;
    }
    return out;
}

int cmd_gen(const std::string& spec_path, const std::string& out_path) {
    const EnvironmentSpec spec = parse_env_spec_file(spec_path);
    const Environment env = generate_env(spec);
    write_text_file(out_path, serialize_env(env));
    std::cout << "walls=" << env.walls.size() << " bbox=[" << env.bbox_min.u << ","
              << env.bbox_min.v << "," << env.bbox_max.u << "," << env.bbox_max.v << "]\n";
    return 0;
}

int cmd_clean(const std::string& in_path, const std::string& out_path,
              const std::string& inliers_path, const ConfigOptions& opts) {
    const PipelineConfig cfg = opts.resolve();
    const TaggedCloud input = parse_cloud_file(in_path);
    const OutlierResult result = remove_outliers(input.points, cfg.outlier);

    TaggedCloud tagged;
    tagged.points = input.points;
    tagged.tags.assign(input.points.size(), PointTag::inlier);
    for (const int i : result.outliers) {
        tagged.tags[static_cast<std::size_t>(i)] = PointTag::outlier;
    }
    write_cloud_file(out_path, tagged);

    if (!inliers_path.empty()) {
        TaggedCloud inliers;
        for (const int i : result.inliers) {
            inliers.points.push_back(input.points[static_cast<std::size_t>(i)]);
        }
        write_cloud_file(inliers_path, inliers);
    }
    std::cout << "points=" << input.points.size() << " outliers=" << result.outliers.size()
              << " inliers=" << result.inliers.size()
              << " scale=" << result.normalization_scale << "\n";
    return 0;
}

int cmd_exit(const std::string& in_path, const std::string& pose_text,
             const std::string& plane_path, const std::vector<std::string>& tri,
             const std::string& svg_path, const ConfigOptions& opts) {
    const PipelineConfig cfg = opts.resolve();
    const TaggedCloud cloud = parse_cloud_file(in_path);
    const Point3 pose = parse_point3(pose_text, "--pose");
    const AffinePlane plane = plane_from_options(plane_path, tri);

    std::vector<Point2> m2d;
    m2d.reserve(cloud.points.size());
    for (const auto& p : cloud.points) m2d.push_back(project_point(plane, p));
    const Point2 x2d = project_point(plane, pose);

    AngularMap map;
    const ExitPoint exit = find_exit_2d(m2d, x2d, plane, cfg.exit, &map);

    std::printf("exit_angle_rad=%.17g\nexit_angle_deg=%.17g\nrange=%.17g\n", exit.angle,
                exit.angle * 180.0 / (kTwoPi / 2.0), exit.range);
    std::printf("point2=%.17g,%.17g\n", exit.point2.u, exit.point2.v);
    std::printf("point3=%.17g,%.17g,%.17g\n", exit.point3.x, exit.point3.y, exit.point3.z);

    if (!svg_path.empty()) {
        RenderScene scene;
        scene.points = m2d;
        scene.agent = x2d;
        scene.map = map;
        scene.exit = exit.point2;
        write_text_file(svg_path, render_svg(scene));
    }
    return 0;
}

int cmd_plan(const std::string& in_path, const std::string& pose_text,
             const std::string& plane_path, const std::vector<std::string>& tri,
             const std::string& goal_text, std::uint64_t seed, const std::string& out_path,
             const std::string& raw_path, const std::string& svg_path,
             const ConfigOptions& opts) {
    PipelineConfig cfg = opts.resolve();
    const TaggedCloud cloud = parse_cloud_file(in_path);
    const Point3 pose = parse_point3(pose_text, "--pose");
    const AffinePlane plane = plane_from_options(plane_path, tri);

    std::vector<Point2> m2d;
    m2d.reserve(cloud.points.size());
    for (const auto& p : cloud.points) m2d.push_back(project_point(plane, p));
    const Point2 x2d = project_point(plane, pose);

    Point2 goal;
    if (!goal_text.empty()) {
        goal = parse_point2(goal_text, "--goal");
    } else {
        goal = find_exit_2d(m2d, x2d, plane, cfg.exit, nullptr).point2;
    }

    cfg.obstacle.seed = mix_seed(seed, 3);
    const ObstacleSet obstacles = build_obstacles(m2d, cfg.obstacle);
    cfg.planner.seed = mix_seed(seed, 2);
    const Path raw = rrt_plan(x2d, goal, obstacles, cfg.planner);
    const Path refined = shortcut_refine(raw, obstacles);

    write_text_file(out_path, serialize_waypoints(refined));
    if (!raw_path.empty()) write_text_file(raw_path, serialize_waypoints(raw));
    if (!svg_path.empty()) {
        RenderScene scene;
        scene.points = m2d;
        scene.agent = x2d;
        scene.exit = goal;
        scene.obstacles = &obstacles;
        scene.raw_path = &raw;
        scene.refined_path = &refined;
        write_text_file(svg_path, render_svg(scene));
    }
    std::cout << "raw_waypoints=" << raw.waypoints.size() << " raw_length=" << raw.length
              << " refined_waypoints=" << refined.waypoints.size()
              << " refined_length=" << refined.length << "\n";
    return 0;
}

int cmd_explore(const std::string& spec_path, std::uint64_t seed, const std::string& out_dir,
                const ConfigOptions& opts) {
    const PipelineConfig cfg = opts.resolve();
    EnvironmentSpec spec = parse_env_spec_file(spec_path);
    spec.seed = mix_seed(seed, 1);
    const Environment env = generate_env(spec);

    SimParams sim;
    sim.outlier = cfg.outlier;
    sim.exit = cfg.exit;
    sim.obstacle = cfg.obstacle;
    sim.obstacle.seed = mix_seed(seed, 3);
    sim.planner = cfg.planner;
    sim.planner.seed = mix_seed(seed, 2);
    sim.sector_radius_scale = cfg.sector_radius_scale;
    sim.max_iterations = cfg.max_iterations;

    const EpisodeLog log = run_exploration(env, spec, sim);

    fs::create_directories(out_dir);
    write_text_file((fs::path(out_dir) / "episode.jsonl").string(), serialize_episode(log));
    std::cout << "iterations=" << log.iterations.size() << " termination=" << log.termination
              << "\n";
    return 0;
}

int cmd_render(const std::string& episode_path, const std::string& cloud_path,
               const std::string& pose_text, const std::string& plane_path,
               const std::vector<std::string>& tri, const std::string& out_path) {
    if (!episode_path.empty()) {
        const EpisodeLog log = parse_episode_file(episode_path);
        const AffinePlane plane =
            (plane_path.empty() && tri.empty())
                ? AffinePlane{{Point3{1, 0, 0}, Point3{0, 1, 0}}, Point3{0, 0, 0}}
                : plane_from_options(plane_path, tri);
        fs::create_directories(out_path);
        write_text_file((fs::path(out_path) / "summary.svg").string(),
                        render_episode_svg(log, plane));
        for (const auto& rec : log.iterations) {
            RenderScene scene;
            for (const auto& p : rec.raw_cloud) scene.points.push_back(project_point(plane, p));
            scene.agent = project_point(plane, rec.pose);
            scene.map = rec.angular_map;
            scene.exit = rec.exit.point2;
            scene.raw_path = &rec.raw_path;
            scene.refined_path = &rec.refined_path;
            char name[32];
            std::snprintf(name, sizeof(name), "iter_%03d.svg", rec.iteration);
            write_text_file((fs::path(out_path) / name).string(), render_svg(scene));
        }
        std::cout << "rendered=" << log.iterations.size() + 1 << "\n";
        return 0;
    }
    if (cloud_path.empty()) {
        throw UsageError("render needs --episode LOG or --cloud FILE");
    }
    const TaggedCloud cloud = parse_cloud_file(cloud_path);
    RenderScene scene;
    if (!plane_path.empty() || !tri.empty()) {
        const AffinePlane plane = plane_from_options(plane_path, tri);
        for (const auto& p : cloud.points) scene.points.push_back(project_point(plane, p));
        if (!pose_text.empty()) {
            scene.agent = project_point(plane, parse_point3(pose_text, "--pose"));
        }
    } else {
        for (const auto& p : cloud.points) scene.points.push_back(Point2{p.x, p.y});
        if (!pose_text.empty()) {
            const Point3 pose = parse_point3(pose_text, "--pose");
            scene.agent = Point2{pose.x, pose.y};
        }
    }
    write_text_file(out_path, render_svg(scene));
    std::cout << "rendered=1\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"sparse-map exploration pipeline"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an environment from a spec");
    std::string gen_spec, gen_out;
    gen->add_option("--spec", gen_spec, "environment spec JSON")->required();
    gen->add_option("--out", gen_out, "output walls JSON")->required();

    // clean
    auto* clean = app.add_subcommand("clean", "remove outliers from a cloud file");
    std::string clean_in, clean_out, clean_inliers;
    clean->add_option("--in", clean_in, "input cloud CSV")->required();
    clean->add_option("--out", clean_out, "tagged output CSV")->required();
    clean->add_option("--inliers-out", clean_inliers, "optional inlier-only CSV");
    ConfigOptions clean_opts;
    clean_opts.attach(clean);

    // exit
    auto* exit_cmd = app.add_subcommand("exit", "find an exit point");
    std::string exit_in, exit_pose, exit_plane, exit_svg;
    std::vector<std::string> exit_tri;
    exit_cmd->add_option("--in", exit_in, "input cloud CSV")->required();
    exit_cmd->add_option("--pose", exit_pose, "agent position x,y,z")->required();
    exit_cmd->add_option("--plane", exit_plane, "plane file (12 reals)");
    exit_cmd->add_option("--tri", exit_tri, "three plane points x,y,z")->expected(3);
    exit_cmd->add_option("--svg", exit_svg, "optional angular-map render");
    ConfigOptions exit_opts;
    exit_opts.attach(exit_cmd);

    // plan
    auto* plan = app.add_subcommand("plan", "synthesize obstacles and plan a path");
    std::string plan_in, plan_pose, plan_plane, plan_goal, plan_out, plan_raw, plan_svg;
    std::vector<std::string> plan_tri;
    std::uint64_t plan_seed = 0;
    plan->add_option("--in", plan_in, "input cloud CSV")->required();
    plan->add_option("--pose", plan_pose, "agent position x,y,z")->required();
    plan->add_option("--plane", plan_plane, "plane file (12 reals)");
    plan->add_option("--tri", plan_tri, "three plane points x,y,z")->expected(3);
    plan->add_option("--goal", plan_goal, "goal u,v in plane coordinates (default: exit point)");
    plan->add_option("--seed", plan_seed, "RNG seed")->required();
    plan->add_option("--out", plan_out, "refined waypoint CSV")->required();
    plan->add_option("--raw-out", plan_raw, "optional raw waypoint CSV");
    plan->add_option("--svg", plan_svg, "optional scene render");
    ConfigOptions plan_opts;
    plan_opts.attach(plan);

    // explore
    auto* explore_cmd = app.add_subcommand("explore", "run a closed-loop episode");
    std::string explore_spec, explore_out;
    std::uint64_t explore_seed = 0;
    explore_cmd->add_option("--spec", explore_spec, "environment spec JSON")->required();
    explore_cmd->add_option("--seed", explore_seed, "RNG seed")->required();
    explore_cmd->add_option("--out", explore_out, "output directory")->required();
    ConfigOptions explore_opts;
    explore_opts.attach(explore_cmd);

    // render
    auto* render = app.add_subcommand("render", "render SVG from logs or clouds");
    std::string render_episode, render_cloud, render_pose, render_plane, render_out;
    std::vector<std::string> render_tri;
    render->add_option("--episode", render_episode, "episode log JSONL");
    render->add_option("--cloud", render_cloud, "cloud CSV");
    render->add_option("--pose", render_pose, "agent position x,y,z");
    render->add_option("--plane", render_plane, "plane file");
    render->add_option("--tri", render_tri, "three plane points x,y,z")->expected(3);
    render->add_option("--out", render_out, "output file (or directory for --episode)")
        ->required();

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_spec, gen_out);
        if (clean->parsed()) return cmd_clean(clean_in, clean_out, clean_inliers, clean_opts);
        if (exit_cmd->parsed()) {
            return cmd_exit(exit_in, exit_pose, exit_plane, exit_tri, exit_svg, exit_opts);
        }
        if (plan->parsed()) {
            return cmd_plan(plan_in, plan_pose, plan_plane, plan_tri, plan_goal, plan_seed,
                            plan_out, plan_raw, plan_svg, plan_opts);
        }
        if (explore_cmd->parsed()) {
            return cmd_explore(explore_spec, explore_seed, explore_out, explore_opts);
        }
        if (render->parsed()) {
            return cmd_render(render_episode, render_cloud, render_pose, render_plane, render_tri,
                              render_out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace explore

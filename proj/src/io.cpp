#include "explore/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "explore/errors.hpp"

namespace explore {

using nlohmann::json;

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                         std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

PointTag tag_from_string(std::string_view s, std::size_t line_no) {
    if (s.empty()) return PointTag::none;
    if (s == "inlier") return PointTag::inlier;
    if (s == "outlier") return PointTag::outlier;
    if (s == "closure") return PointTag::closure;
    throw ParseError("line " + std::to_string(line_no) + ": unknown tag '" + std::string(s) + "'");
}

std::string_view tag_to_string(PointTag t) {
    switch (t) {
        case PointTag::inlier: return "inlier";
        case PointTag::outlier: return "outlier";
        case PointTag::closure: return "closure";
        case PointTag::none: break;
    }
    return "";
}

} // namespace

TaggedCloud parse_cloud(std::istream& in) {
    TaggedCloud cloud;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    bool has_tags = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        if (!saw_header) {
            if (line == "x,y,z") {
                has_tags = false;
            } else if (line == "x,y,z,tag") {
                has_tags = true;
            } else {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'x,y,z' or 'x,y,z,tag'");
            }
            saw_header = true;
            continue;
        }

        const auto fields = split_fields(line);
        const std::size_t expected = has_tags ? 4 : 3;
        if (fields.size() != expected) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected) + " fields, got " +
                             std::to_string(fields.size()));
        }
        cloud.points.push_back({parse_double(fields[0], line_no), parse_double(fields[1], line_no),
                                parse_double(fields[2], line_no)});
        if (has_tags) cloud.tags.push_back(tag_from_string(fields[3], line_no));
    }
    if (!saw_header) throw EmptyInputError("cloud file has no content");
    return cloud;
}

TaggedCloud parse_cloud_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cloud file: " + path);
    return parse_cloud(in);
}

std::string serialize_cloud(const TaggedCloud& cloud) {
    std::string out = "# format_version=1\n";
    const bool has_tags = !cloud.tags.empty();
    out += has_tags ? "x,y,z,tag\n" : "x,y,z\n";
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        const auto& p = cloud.points[i];
        out += fmt_double(p.x);
        out += ',';
        out += fmt_double(p.y);
        out += ',';
        out += fmt_double(p.z);
        if (has_tags) {
            out += ',';
            out += tag_to_string(cloud.tags[i]);
        }
        out += '\n';
    }
    return out;
}

void write_cloud_file(const std::string& path, const TaggedCloud& cloud) {
    write_text_file(path, serialize_cloud(cloud));
}

AffinePlane parse_plane_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open plane file: " + path);
    // Pose-style 3x4 frame, column-major: basis column 1, basis column 2,
    // plane normal, then the offset v.
    std::array<double, 12> vals{};
    for (auto& v : vals) {
        if (!(in >> v) || !std::isfinite(v)) {
            throw ParseError("plane file must hold 12 finite reals: " + path);
        }
    }
    AffinePlane plane;
    plane.basis[0] = {vals[0], vals[1], vals[2]};
    plane.basis[1] = {vals[3], vals[4], vals[5]};
    plane.offset = {vals[9], vals[10], vals[11]};
    const double e1 = std::abs(norm(plane.basis[0]) - 1.0);
    const double e2 = std::abs(norm(plane.basis[1]) - 1.0);
    const double e3 = std::abs(dot(plane.basis[0], plane.basis[1]));
    if (e1 > 1e-9 || e2 > 1e-9 || e3 > 1e-9) {
        throw DegenerateInputError("plane file basis is not orthonormal: " + path);
    }
    return plane;
}

std::string serialize_plane(const AffinePlane& plane) {
    const Point3 normal = cross(plane.basis[0], plane.basis[1]);
    std::string out;
    const double vals[12] = {plane.basis[0].x, plane.basis[0].y, plane.basis[0].z,
                             plane.basis[1].x, plane.basis[1].y, plane.basis[1].z,
                             normal.x,         normal.y,         normal.z,
                             plane.offset.x,   plane.offset.y,   plane.offset.z};
    for (int i = 0; i < 12; ++i) {
        out += fmt_double(vals[i]);
        out += (i % 3 == 2) ? '\n' : ' ';
    }
    return out;
}

namespace {

void require_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                  const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const auto a : allowed) {
            if (it.key() == a) {
                known = true;
                break;
            }
        }
        if (!known) throw ParseError(where + ": unknown key '" + it.key() + "'");
    }
}

Point2 point2_from(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.size() != 2) throw ParseError(where + ": expected [u, v]");
    return {arr[0].get<double>(), arr[1].get<double>()};
}

Point3 point3_from(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.size() != 3) throw ParseError(where + ": expected [x, y, z]");
    return {arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
}

json point2_to(const Point2& p) { return json::array({p.u, p.v}); }
json point3_to(const Point3& p) { return json::array({p.x, p.y, p.z}); }

json parse_json_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what + ": malformed JSON");
    return j;
}

} // namespace

EnvironmentSpec parse_env_spec(const std::string& json_text) {
    const json j = parse_json_text(json_text, "environment spec");
    require_keys(j,
                 {"format_version", "rooms", "doorways", "feature_density", "outlier_rate",
                  "outlier_radius", "sensor_noise", "seed", "start", "flight_height"},
                 "environment spec");

    EnvironmentSpec spec;
    if (!j.contains("rooms") || !j.at("rooms").is_array() || j.at("rooms").empty()) {
        throw InvalidSpecError("environment spec: 'rooms' must be a non-empty array");
    }
    for (const auto& room : j.at("rooms")) {
        require_keys(room, {"min", "max"}, "room");
        spec.rooms.push_back(
            {point2_from(room.at("min"), "room.min"), point2_from(room.at("max"), "room.max")});
    }
    if (j.contains("doorways")) {
        for (const auto& d : j.at("doorways")) {
            require_keys(d, {"wall", "offset", "width"}, "doorway");
            spec.doorways.push_back({d.at("wall").get<int>(), d.at("offset").get<double>(),
                                     d.at("width").get<double>()});
        }
    }
    if (j.contains("feature_density")) spec.feature_density = j.at("feature_density").get<double>();
    if (j.contains("outlier_rate")) spec.outlier_rate = j.at("outlier_rate").get<double>();
    if (j.contains("outlier_radius")) spec.outlier_radius = j.at("outlier_radius").get<double>();
    if (j.contains("sensor_noise")) spec.sensor_noise = j.at("sensor_noise").get<double>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("start")) spec.start = point2_from(j.at("start"), "start");
    if (j.contains("flight_height")) spec.flight_height = j.at("flight_height").get<double>();
    return spec;
}

EnvironmentSpec parse_env_spec_file(const std::string& path) {
    return parse_env_spec(read_text_file(path));
}

std::string serialize_env(const Environment& env) {
    json j;
    j["format_version"] = 1;
    json walls = json::array();
    for (const auto& w : env.walls) {
        walls.push_back(json::array({w.a.u, w.a.v, w.b.u, w.b.v}));
    }
    j["walls"] = std::move(walls);
    j["bbox"] = json::array({env.bbox_min.u, env.bbox_min.v, env.bbox_max.u, env.bbox_max.v});
    j["start"] = point3_to(env.start);
    return j.dump(2) + "\n";
}

namespace {

void check_range(bool ok, const std::string& what) {
    if (!ok) throw InvalidSpecError("config: " + what);
}

} // namespace

PipelineConfig parse_config(const std::string& json_text) {
    const json j = parse_json_text(json_text, "config");
    require_keys(j,
                 {"format_version", "outlier", "exit", "obstacle", "planner",
                  "sector_radius_scale", "max_iterations", "sim_spec", "output_dir"},
                 "config");

    PipelineConfig cfg;
    if (j.contains("outlier")) {
        const json& o = j.at("outlier");
        require_keys(o, {"lambda", "k", "beta", "epsilon", "normalize"}, "config.outlier");
        if (o.contains("lambda")) cfg.outlier.lambda = o.at("lambda").get<double>();
        if (o.contains("k")) cfg.outlier.k = o.at("k").get<int>();
        if (o.contains("beta")) cfg.outlier.beta = o.at("beta").get<double>();
        if (o.contains("epsilon")) cfg.outlier.score.epsilon = o.at("epsilon").get<double>();
        if (o.contains("normalize")) cfg.outlier.score.normalize = o.at("normalize").get<bool>();
        check_range(cfg.outlier.lambda >= 0.0, "outlier.lambda must be >= 0");
        check_range(cfg.outlier.k >= 1, "outlier.k must be >= 1");
        check_range(cfg.outlier.beta >= 0.0, "outlier.beta must be >= 0");
        check_range(cfg.outlier.score.epsilon > 0.0, "outlier.epsilon must be > 0");
    }
    if (j.contains("exit")) {
        const json& e = j.at("exit");
        require_keys(e, {"circular_gap", "r_from_agent"}, "config.exit");
        if (e.contains("circular_gap")) cfg.exit.circular_gap = e.at("circular_gap").get<bool>();
        if (e.contains("r_from_agent")) cfg.exit.r_from_agent = e.at("r_from_agent").get<bool>();
    }
    if (j.contains("obstacle")) {
        const json& o = j.at("obstacle");
        require_keys(o, {"clusters", "margin", "max_iters", "seed"}, "config.obstacle");
        if (o.contains("clusters")) cfg.obstacle.clusters = o.at("clusters").get<int>();
        if (o.contains("margin")) cfg.obstacle.margin = o.at("margin").get<double>();
        if (o.contains("max_iters")) cfg.obstacle.max_iters = o.at("max_iters").get<int>();
        if (o.contains("seed")) cfg.obstacle.seed = o.at("seed").get<std::uint64_t>();
        check_range(cfg.obstacle.clusters >= 1, "obstacle.clusters must be >= 1");
        check_range(cfg.obstacle.margin >= 0.0, "obstacle.margin must be >= 0");
        check_range(cfg.obstacle.max_iters >= 1, "obstacle.max_iters must be >= 1");
    }
    if (j.contains("planner")) {
        const json& p = j.at("planner");
        require_keys(p, {"step_size", "goal_bias", "goal_tolerance", "max_iters", "seed", "bounds"},
                     "config.planner");
        if (p.contains("step_size")) cfg.planner.step_size = p.at("step_size").get<double>();
        if (p.contains("goal_bias")) cfg.planner.goal_bias = p.at("goal_bias").get<double>();
        if (p.contains("goal_tolerance")) {
            cfg.planner.goal_tolerance = p.at("goal_tolerance").get<double>();
        }
        if (p.contains("max_iters")) cfg.planner.max_iters = p.at("max_iters").get<int>();
        if (p.contains("seed")) cfg.planner.seed = p.at("seed").get<std::uint64_t>();
        if (p.contains("bounds")) {
            const json& b = p.at("bounds");
            require_keys(b, {"min", "max"}, "config.planner.bounds");
            cfg.planner.bounds = SamplingBounds{point2_from(b.at("min"), "bounds.min"),
                                                point2_from(b.at("max"), "bounds.max")};
        }
        check_range(cfg.planner.step_size > 0.0, "planner.step_size must be > 0");
        check_range(cfg.planner.goal_bias >= 0.0 && cfg.planner.goal_bias <= 1.0,
                    "planner.goal_bias must be in [0, 1]");
        check_range(cfg.planner.goal_tolerance > 0.0, "planner.goal_tolerance must be > 0");
        check_range(cfg.planner.max_iters >= 1, "planner.max_iters must be >= 1");
    }
    if (j.contains("sector_radius_scale")) {
        cfg.sector_radius_scale = j.at("sector_radius_scale").get<double>();
        check_range(cfg.sector_radius_scale >= 0.0, "sector_radius_scale must be >= 0");
    }
    if (j.contains("max_iterations")) {
        cfg.max_iterations = j.at("max_iterations").get<int>();
        check_range(cfg.max_iterations >= 0, "max_iterations must be >= 0");
    }
    if (j.contains("sim_spec")) cfg.sim_spec = j.at("sim_spec").get<std::string>();
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    return cfg;
}

PipelineConfig parse_config_file(const std::string& path) {
    return parse_config(read_text_file(path));
}

namespace {

json path_to_json(const Path& p) {
    json arr = json::array();
    for (const auto& w : p.waypoints) arr.push_back(point2_to(w));
    return json{{"waypoints", std::move(arr)}, {"length", p.length}};
}

Path path_from_json(const json& j) {
    Path p;
    for (const auto& w : j.at("waypoints")) p.waypoints.push_back(point2_from(w, "waypoint"));
    p.length = j.at("length").get<double>();
    return p;
}

} // namespace

std::string serialize_episode(const EpisodeLog& log) {
    std::string out;
    for (const auto& rec : log.iterations) {
        json j;
        j["format_version"] = 1;
        j["type"] = "iteration";
        j["iteration"] = rec.iteration;
        j["pose"] = point3_to(rec.pose);
        json cloud = json::array();
        for (const auto& p : rec.raw_cloud) cloud.push_back(point3_to(p));
        j["cloud"] = std::move(cloud);
        j["inliers"] = rec.inliers;
        j["outliers"] = rec.outliers;
        j["closure_points"] = rec.closure_points;
        json covered = json::array();
        for (const auto& iv : rec.angular_map.covered) {
            covered.push_back(json::array({iv.start, iv.end, iv.d_hat}));
        }
        j["map"] = json{{"r", rec.angular_map.r}, {"covered", std::move(covered)}};
        j["exit"] = json{{"angle", rec.exit.angle},
                         {"range", rec.exit.range},
                         {"point2", point2_to(rec.exit.point2)},
                         {"point3", point3_to(rec.exit.point3)}};
        j["raw_path"] = path_to_json(rec.raw_path);
        j["refined_path"] = path_to_json(rec.refined_path);
        out += j.dump();
        out += '\n';
    }
    json tail;
    tail["format_version"] = 1;
    tail["type"] = "summary";
    tail["termination"] = log.termination;
    tail["final_pose"] = point3_to(log.final_pose);
    tail["iterations"] = log.iterations.size();
    out += tail.dump();
    out += '\n';
    return out;
}

EpisodeLog parse_episode(std::istream& in) {
    EpisodeLog log;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw ParseError("episode line " + std::to_string(line_no) + ": malformed JSON");
        }
        const std::string type = j.at("type").get<std::string>();
        if (type == "summary") {
            log.termination = j.at("termination").get<std::string>();
            log.final_pose = point3_from(j.at("final_pose"), "final_pose");
            continue;
        }
        IterationRecord rec;
        rec.iteration = j.at("iteration").get<int>();
        rec.pose = point3_from(j.at("pose"), "pose");
        for (const auto& p : j.at("cloud")) rec.raw_cloud.push_back(point3_from(p, "cloud point"));
        rec.inliers = j.at("inliers").get<IndexSet>();
        rec.outliers = j.at("outliers").get<IndexSet>();
        rec.closure_points = j.at("closure_points").get<std::size_t>();
        rec.angular_map.r = j.at("map").at("r").get<double>();
        for (const auto& iv : j.at("map").at("covered")) {
            rec.angular_map.covered.push_back(
                {iv[0].get<double>(), iv[1].get<double>(), iv[2].get<double>()});
        }
        rec.exit.angle = j.at("exit").at("angle").get<double>();
        rec.exit.range = j.at("exit").at("range").get<double>();
        rec.exit.point2 = point2_from(j.at("exit").at("point2"), "exit.point2");
        rec.exit.point3 = point3_from(j.at("exit").at("point3"), "exit.point3");
        rec.raw_path = path_from_json(j.at("raw_path"));
        rec.refined_path = path_from_json(j.at("refined_path"));
        log.iterations.push_back(std::move(rec));
    }
    return log;
}

EpisodeLog parse_episode_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open episode log: " + path);
    return parse_episode(in);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

} // namespace explore

#include "explore/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "explore/errors.hpp"

namespace explore {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kPad = 40.0;

const char* kPointColor = "#3366cc";
const char* kAgentColor = "#cc2222";
const char* kRayColor = "#22aa44";
const char* kExitColor = "#ddbb00";
const char* kObstacleFill = "#c8c8c8";
const char* kObstacleStroke = "#555555";
const char* kRawPathColor = "#9999ee";
const char* kPathColor = "#303090";

struct Bounds {
    double min_u = std::numeric_limits<double>::infinity();
    double min_v = std::numeric_limits<double>::infinity();
    double max_u = -std::numeric_limits<double>::infinity();
    double max_v = -std::numeric_limits<double>::infinity();

    void add(const Point2& p) {
        min_u = std::min(min_u, p.u);
        min_v = std::min(min_v, p.v);
        max_u = std::max(max_u, p.u);
        max_v = std::max(max_v, p.v);
    }
    bool valid() const { return min_u <= max_u && min_v <= max_v; }
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", x);
    return buf;
}

class Canvas {
  public:
    explicit Canvas(const Bounds& b) {
        const double du = std::max(b.max_u - b.min_u, 1e-9);
        const double dv = std::max(b.max_v - b.min_v, 1e-9);
        scale_ = (kCanvas - 2.0 * kPad) / std::max(du, dv);
        origin_u_ = b.min_u;
        top_v_ = b.max_v;
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kCanvas) +
                 "\" height=\"" + num(kCanvas) + "\" viewBox=\"0 0 " + num(kCanvas) + " " +
                 num(kCanvas) + "\">\n";
        body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    double sx(double u) const { return kPad + (u - origin_u_) * scale_; }
    double sy(double v) const { return kPad + (top_v_ - v) * scale_; }

    void circle(const Point2& p, double r, const char* fill) {
        body_ += "<circle cx=\"" + num(sx(p.u)) + "\" cy=\"" + num(sy(p.v)) + "\" r=\"" + num(r) +
                 "\" fill=\"" + fill + "\"/>\n";
    }

    void line(const Point2& a, const Point2& b, const char* stroke, double width) {
        body_ += "<line x1=\"" + num(sx(a.u)) + "\" y1=\"" + num(sy(a.v)) + "\" x2=\"" +
                 num(sx(b.u)) + "\" y2=\"" + num(sy(b.v)) + "\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + num(width) + "\"/>\n";
    }

    void polyline(const std::vector<Point2>& pts, const char* stroke, double width) {
        if (pts.size() < 2) return;
        body_ += "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i > 0) body_ += ' ';
            body_ += num(sx(pts[i].u)) + "," + num(sy(pts[i].v));
        }
        body_ += "\" fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
                 num(width) + "\"/>\n";
    }

    void polygon(const std::vector<Point2>& pts, const char* fill, const char* stroke) {
        if (pts.empty()) return;
        body_ += "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i > 0) body_ += ' ';
            body_ += num(sx(pts[i].u)) + "," + num(sy(pts[i].v));
        }
        body_ += "\" fill=\"" + std::string(fill) + "\" fill-opacity=\"0.6\" stroke=\"" + stroke +
                 "\" stroke-width=\"1\"/>\n";
    }

    void cross_marker(const Point2& p, const char* stroke, double half, double width) {
        const double cx = sx(p.u);
        const double cy = sy(p.v);
        body_ += "<line x1=\"" + num(cx - half) + "\" y1=\"" + num(cy - half) + "\" x2=\"" +
                 num(cx + half) + "\" y2=\"" + num(cy + half) + "\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + num(width) + "\"/>\n";
        body_ += "<line x1=\"" + num(cx - half) + "\" y1=\"" + num(cy + half) + "\" x2=\"" +
                 num(cx + half) + "\" y2=\"" + num(cy - half) + "\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + num(width) + "\"/>\n";
    }

    std::string finish() { return body_ + "</svg>\n"; }

  private:
    double scale_ = 1.0;
    double origin_u_ = 0.0;
    double top_v_ = 0.0;
    std::string body_;
};

} // namespace

std::string render_svg(const RenderScene& scene) {
    Bounds b;
    for (const auto& p : scene.points) b.add(p);
    if (scene.agent) b.add(*scene.agent);
    if (scene.exit) b.add(*scene.exit);
    if (scene.obstacles != nullptr) {
        for (const auto& poly : scene.obstacles->polygons) {
            b.add(poly.bbox_min);
            b.add(poly.bbox_max);
        }
    }
    if (scene.raw_path != nullptr) {
        for (const auto& w : scene.raw_path->waypoints) b.add(w);
    }
    if (scene.refined_path != nullptr) {
        for (const auto& w : scene.refined_path->waypoints) b.add(w);
    }
    if (scene.map && scene.agent) {
        for (const auto& iv : scene.map->covered) {
            const double mid = 0.5 * (iv.start + iv.end);
            b.add(*scene.agent + Point2{iv.d_hat * std::cos(mid), iv.d_hat * std::sin(mid)});
        }
    }
    if (!b.valid()) throw EmptyInputError("render_svg: empty scene");

    Canvas canvas(b);
    if (scene.obstacles != nullptr) {
        for (const auto& poly : scene.obstacles->polygons) {
            canvas.polygon(poly.vertices, kObstacleFill, kObstacleStroke);
        }
    }
    if (scene.map && scene.agent) {
        for (const auto& iv : scene.map->covered) {
            const double mid = 0.5 * (iv.start + iv.end);
            canvas.line(*scene.agent,
                        *scene.agent + Point2{iv.d_hat * std::cos(mid), iv.d_hat * std::sin(mid)},
                        kRayColor, 1.0);
        }
    }
    for (const auto& p : scene.points) canvas.circle(p, 2.0, kPointColor);
    if (scene.raw_path != nullptr) canvas.polyline(scene.raw_path->waypoints, kRawPathColor, 1.5);
    if (scene.refined_path != nullptr) {
        canvas.polyline(scene.refined_path->waypoints, kPathColor, 2.5);
    }
    if (scene.agent) canvas.circle(*scene.agent, 5.0, kAgentColor);
    if (scene.exit) canvas.cross_marker(*scene.exit, kExitColor, 8.0, 3.0);
    return canvas.finish();
}

std::string render_episode_svg(const EpisodeLog& log, const AffinePlane& plane) {
    Bounds b;
    for (const auto& rec : log.iterations) {
        for (const auto& p : rec.raw_cloud) b.add(project_point(plane, p));
        for (const auto& w : rec.refined_path.waypoints) b.add(w);
        b.add(project_point(plane, rec.pose));
        b.add(rec.exit.point2);
    }
    if (!b.valid()) throw EmptyInputError("render_episode_svg: empty episode");

    Canvas canvas(b);
    for (const auto& rec : log.iterations) {
        for (std::size_t i = 0; i < rec.inliers.size(); ++i) {
            canvas.circle(project_point(plane, rec.raw_cloud[static_cast<std::size_t>(
                              rec.inliers[i])]),
                          1.5, kPointColor);
        }
    }
    for (const auto& rec : log.iterations) {
        canvas.polyline(rec.refined_path.waypoints, kPathColor, 2.0);
        canvas.circle(project_point(plane, rec.pose), 4.0, kAgentColor);
        canvas.cross_marker(rec.exit.point2, kExitColor, 6.0, 2.0);
    }
    return canvas.finish();
}

} // namespace explore

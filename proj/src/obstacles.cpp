#include "explore/obstacles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "explore/errors.hpp"

namespace explore {

namespace {

constexpr double kDegenerateTol = 1e-9;
constexpr double kMinInflate = 1e-3;

bool lex_less(const Point2& a, const Point2& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
}

/// Monotone chain over lexicographically sorted points; collinear points are
/// dropped so the result is strictly convex.
std::vector<Point2> chain_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;

    std::vector<Point2> hull(2 * n);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower hull
        while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0.0) --h;
        hull[h++] = pts[i];
    }
    const std::size_t lower = h + 1;
    for (std::size_t i = n - 1; i-- > 0;) { // upper hull
        while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0.0) --h;
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);
    return hull;
}

} // namespace

ConvexPolygon make_polygon(std::vector<Point2> vertices) {
    ConvexPolygon poly;
    poly.vertices = std::move(vertices);
    poly.bbox_min = {std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity()};
    poly.bbox_max = {-std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()};
    for (const auto& p : poly.vertices) {
        poly.bbox_min.u = std::min(poly.bbox_min.u, p.u);
        poly.bbox_min.v = std::min(poly.bbox_min.v, p.v);
        poly.bbox_max.u = std::max(poly.bbox_max.u, p.u);
        poly.bbox_max.v = std::max(poly.bbox_max.v, p.v);
    }
    return poly;
}

bool point_in_polygon(const ConvexPolygon& poly, const Point2& p) {
    if (p.u < poly.bbox_min.u || p.u > poly.bbox_max.u || p.v < poly.bbox_min.v ||
        p.v > poly.bbox_max.v) {
        return false;
    }
    const auto& vs = poly.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::size_t j = (i + 1) % vs.size();
        if (cross(vs[i], vs[j], p) < 0.0) return false;
    }
    return true;
}

std::vector<Cluster> kmeans(const std::vector<Point2>& points, const ObstacleParams& params,
                            kernels::Exec exec) {
    if (points.empty()) throw EmptyInputError("kmeans: empty point set");
    const std::size_t n = points.size();
    const std::size_t k = static_cast<std::size_t>(params.clusters);

    if (k >= n) {
        std::vector<Cluster> singletons(n);
        for (std::size_t i = 0; i < n; ++i) {
            singletons[i].centroid = points[i];
            singletons[i].members = {static_cast<int>(i)};
        }
        return singletons;
    }

    // Farthest-point seeding from the first point. Stops early once every
    // point coincides with a chosen centroid.
    std::vector<Point2> centroids;
    centroids.reserve(k);
    centroids.push_back(points[0]);
    std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
    while (centroids.size() < k) {
        const Point2& last = centroids.back();
        for (std::size_t i = 0; i < n; ++i) {
            const double du = points[i].u - last.u;
            const double dv = points[i].v - last.v;
            min_d2[i] = std::min(min_d2[i], du * du + dv * dv);
        }
        std::size_t far = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (min_d2[i] > min_d2[far]) far = i;
        }
        if (min_d2[far] == 0.0) break;
        centroids.push_back(points[far]);
    }

    std::vector<int> assign;
    std::vector<int> prev_assign;
    std::vector<Point2> sums(centroids.size());
    std::vector<std::size_t> counts(centroids.size());
    for (int iter = 0; iter < params.max_iters; ++iter) {
        kernels::kmeans_assign(points, centroids, assign, exec);
        if (assign == prev_assign) break;
        prev_assign = assign;

        std::fill(sums.begin(), sums.end(), Point2{});
        std::fill(counts.begin(), counts.end(), std::size_t{0});
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = static_cast<std::size_t>(assign[i]);
            sums[c] = sums[c] + points[i];
            ++counts[c];
        }
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            if (counts[c] > 0) {
                centroids[c] = sums[c] * (1.0 / static_cast<double>(counts[c]));
            }
        }
    }

    std::vector<Cluster> clusters(centroids.size());
    for (std::size_t c = 0; c < centroids.size(); ++c) clusters[c].centroid = centroids[c];
    for (std::size_t i = 0; i < n; ++i) {
        clusters[static_cast<std::size_t>(assign[i])].members.push_back(static_cast<int>(i));
    }
    std::erase_if(clusters, [](const Cluster& c) { return c.members.empty(); });
    return clusters;
}

namespace {

ConvexPolygon inflate_point(const Point2& p, double w) {
    return make_polygon({{p.u - w, p.v - w}, {p.u + w, p.v - w}, {p.u + w, p.v + w},
                         {p.u - w, p.v + w}});
}

ConvexPolygon inflate_segment(const Point2& e0, const Point2& e1, double w) {
    const Point2 d = e1 - e0;
    const double len = norm(d);
    const Point2 dir = d * (1.0 / len);
    const Point2 nrm{-dir.v, dir.u};
    return make_polygon({e0 - nrm * w, e1 - nrm * w, e1 + nrm * w, e0 + nrm * w});
}

/// Offset each hull edge outward by margin; vertices are beveled. The result
/// contains the original hull, so point containment is preserved.
std::vector<Point2> offset_hull(const std::vector<Point2>& hull, double margin) {
    std::vector<Point2> shifted;
    shifted.reserve(hull.size() * 2);
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point2& a = hull[i];
        const Point2& b = hull[(i + 1) % hull.size()];
        const Point2 d = b - a;
        const double len = norm(d);
        if (len == 0.0) continue;
        // Outward normal of a CCW edge points to its right.
        const Point2 nrm{d.v / len, -d.u / len};
        shifted.push_back(a + nrm * margin);
        shifted.push_back(b + nrm * margin);
    }
    return chain_hull(std::move(shifted));
}

} // namespace

ConvexPolygon convex_hull(const std::vector<Point2>& cluster, double margin) {
    if (cluster.empty()) throw EmptyInputError("convex_hull: empty cluster");

    // Degeneracy: all points within tolerance of one point or one line.
    Point2 lo = cluster[0];
    Point2 hi = cluster[0];
    for (const auto& p : cluster) {
        if (lex_less(p, lo)) lo = p;
        if (lex_less(hi, p)) hi = p;
    }
    const double w = std::max(margin, kMinInflate);
    const Point2 span = hi - lo;
    const double span_len = norm(span);
    if (span_len <= kDegenerateTol) {
        return inflate_point(lo, w);
    }

    const Point2 dir = span * (1.0 / span_len);
    double max_perp = 0.0;
    double t_min = std::numeric_limits<double>::infinity();
    double t_max = -std::numeric_limits<double>::infinity();
    for (const auto& p : cluster) {
        const Point2 d = p - lo;
        max_perp = std::max(max_perp, std::abs(d.u * dir.v - d.v * dir.u));
        const double t = dot(d, dir);
        t_min = std::min(t_min, t);
        t_max = std::max(t_max, t);
    }
    if (max_perp <= kDegenerateTol) {
        return inflate_segment(lo + dir * t_min, lo + dir * t_max, w);
    }

    std::vector<Point2> hull = chain_hull(cluster);
    if (margin > 0.0) hull = offset_hull(hull, margin);
    return make_polygon(std::move(hull));
}

ObstacleSet build_obstacles(const std::vector<Point2>& cloud2d, const ObstacleParams& params,
                            kernels::Exec exec) {
    if (cloud2d.empty()) throw EmptyInputError("build_obstacles: empty projected cloud");
    const std::vector<Cluster> clusters = kmeans(cloud2d, params, exec);

    ObstacleSet set;
    set.polygons.resize(clusters.size());
    set.provenance.resize(clusters.size());
    const std::int64_t m = static_cast<std::int64_t>(clusters.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < m; ++c) {
        std::vector<Point2> pts;
        pts.reserve(clusters[static_cast<std::size_t>(c)].members.size());
        for (const int i : clusters[static_cast<std::size_t>(c)].members) {
            pts.push_back(cloud2d[static_cast<std::size_t>(i)]);
        }
        set.polygons[static_cast<std::size_t>(c)] = convex_hull(pts, params.margin);
        set.provenance[static_cast<std::size_t>(c)] = static_cast<int>(c);
    }
    return set;
}

} // namespace explore

#include "explore/geometry.hpp"

#include <algorithm>

#include "explore/errors.hpp"

namespace explore {

AffinePlane plane_from_three_points(const Point3& p1, const Point3& p2, const Point3& p3) {
    const Point3 e1 = p2 - p1;
    const Point3 e2 = p3 - p1;
    const double area = 0.5 * norm(cross(e1, e2));
    if (area <= 1e-12) {
        throw DegenerateInputError("plane_from_three_points: points are collinear or coincident");
    }
    const Point3 b1 = e1 * (1.0 / norm(e1));
    Point3 b2 = e2 - b1 * dot(e2, b1);
    b2 = b2 * (1.0 / norm(b2));
    return AffinePlane{{b1, b2}, p1};
}

Point2 project_point(const AffinePlane& plane, const Point3& p) {
    const Point3 d = p - plane.offset;
    return {dot(d, plane.basis[0]), dot(d, plane.basis[1])};
}

Point3 lift_from_plane(const AffinePlane& plane, const Point2& q) {
    return plane.offset + plane.basis[0] * q.u + plane.basis[1] * q.v;
}

double distance_score(const Point3& a, const Point3& b, const ScoreParams& params) {
    const double d = distance(a, b);
    if (d < params.epsilon) return 0.0;
    return 1.0 - 1.0 / d;
}

double relative_angle(const Point2& origin, const Point2& p) {
    const Point2 d = p - origin;
    if (norm(d) < 1e-12) {
        throw DegenerateInputError("relative_angle: point coincides with origin");
    }
    double a = std::atan2(d.v, d.u);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

namespace {

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    return std::min(a.u, b.u) <= p.u && p.u <= std::max(a.u, b.u) &&
           std::min(a.v, b.v) <= p.v && p.v <= std::max(a.v, b.v);
}

int orientation_sign(const Point2& a, const Point2& b, const Point2& c) {
    const double o = cross(a, b, c);
    if (o > 0.0) return 1;
    if (o < 0.0) return -1;
    return 0;
}

} // namespace

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const int o1 = orientation_sign(a, b, c);
    const int o2 = orientation_sign(a, b, d);
    const int o3 = orientation_sign(c, d, a);
    const int o4 = orientation_sign(c, d, b);

    if (o1 != o2 && o3 != o4) return true;

    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

double normalize_median_distance(PointCloud3& cloud, double epsilon) {
    const size_t n = cloud.size();
    if (n < 2) return 1.0;
    std::vector<double> dists;
    dists.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            dists.push_back(distance(cloud[i], cloud[j]));
        }
    }
    // Lower median, so the reference distance is always one of the inputs.
    const size_t mid = (dists.size() - 1) / 2;
    std::nth_element(dists.begin(), dists.begin() + static_cast<std::ptrdiff_t>(mid), dists.end());
    const double median = dists[mid];
    if (median < epsilon) return 1.0;
    const double scale = 1.0 / median;
    for (auto& p : cloud) p = p * scale;
    return scale;
}

} // namespace explore

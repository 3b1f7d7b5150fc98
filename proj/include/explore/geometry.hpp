#ifndef EXPLORE_GEOMETRY_HPP_
#define EXPLORE_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <vector>

namespace explore {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
    bool operator==(const Point3& o) const = default;
};

inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }

struct Point2 {
    double u = 0.0;
    double v = 0.0;

    Point2 operator+(const Point2& o) const { return {u + o.u, v + o.v}; }
    Point2 operator-(const Point2& o) const { return {u - o.u, v - o.v}; }
    Point2 operator*(double s) const { return {u * s, v * s}; }
    bool operator==(const Point2& o) const = default;
};

inline double dot(const Point2& a, const Point2& b) { return a.u * b.u + a.v * b.v; }
/// z component of the 3D cross product of (b - a) and (c - a).
inline double cross(const Point2& a, const Point2& b, const Point2& c) {
    return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}
inline double norm(const Point2& a) { return std::sqrt(a.u * a.u + a.v * a.v); }
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }

using PointCloud3 = std::vector<Point3>;

/// 2D affine subspace of R^3: two orthonormal basis columns plus an offset.
struct AffinePlane {
    std::array<Point3, 2> basis;
    Point3 offset;
};

/// Parameters of the pairwise distance score s = 1 - 1/d.
struct ScoreParams {
    double epsilon = 1e-6; ///< pairs closer than this score 0 instead of diverging
    bool normalize = false; ///< rescale the cloud so the median pairwise distance is 1
};

/// Builds the plane through three non-collinear points. The offset is the first
/// point; the basis comes from Gram-Schmidt on (p2-p1, p3-p1).
AffinePlane plane_from_three_points(const Point3& p1, const Point3& p2, const Point3& p3);

/// In-plane coordinates A^T (p - v).
Point2 project_point(const AffinePlane& plane, const Point3& p);

/// Back to 3D: A q + v.
Point3 lift_from_plane(const AffinePlane& plane, const Point2& q);

/// s = 1 - 1/d(a, b), with coincident pairs (d < epsilon) scoring 0.
double distance_score(const Point3& a, const Point3& b, const ScoreParams& params);

/// Angle of p - origin in [0, 2*pi). Throws when p coincides with origin.
double relative_angle(const Point2& origin, const Point2& p);

/// True when closed segments [a,b] and [c,d] share at least one point
/// (touching endpoints and collinear overlap count).
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Uniformly rescales the cloud so its median pairwise distance is 1.
/// Returns the applied scale factor (1 when the cloud has < 2 points or is
/// fully coincident).
double normalize_median_distance(PointCloud3& cloud, double epsilon);

} // namespace explore

#endif // EXPLORE_GEOMETRY_HPP_

// Shared test utilities: independent brute-force oracles for the outlier
// objective plus simple geometric checkers. Everything here recomputes from
// first principles and stays off the library's kernel code paths.

#ifndef EXPLORE_TESTS_SUPPORT_HPP_
#define EXPLORE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "explore/geometry.hpp"
#include "explore/outliers.hpp"
#include "explore/rng.hpp"

namespace testsupport {

using explore::GroundSets;
using explore::IndexSet;
using explore::OutlierParams;
using explore::Point2;
using explore::Point3;
using explore::PointCloud3;
using explore::Rng;

inline double oracle_score(const Point3& a, const Point3& b, double epsilon) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (d < epsilon) return 0.0;
    return 1.0 - 1.0 / d;
}

/// Direct transcription of the outlier objective, one term at a time.
inline double oracle_eval_f(const GroundSets& g, const IndexSet& X, const IndexSet& Y,
                            const OutlierParams& p) {
    std::vector<bool> in_x(g.n1.size(), false);
    for (const int v : X) in_x[static_cast<std::size_t>(v)] = true;

    double facility = 0.0;
    for (std::size_t v = 0; v < g.n1.size(); ++v) {
        if (in_x[v]) continue;
        double best = 0.0; // max over an empty Y is 0
        bool first = true;
        for (const int u : Y) {
            const double s = oracle_score(g.n2[static_cast<std::size_t>(u)], g.n1[v],
                                          p.score.epsilon);
            if (first || s > best) best = s;
            first = false;
        }
        facility += best;
    }

    double pair = 0.0;
    for (const int u : Y) {
        for (const int v : Y) {
            pair += oracle_score(g.n2[static_cast<std::size_t>(u)],
                                 g.n2[static_cast<std::size_t>(v)], p.score.epsilon);
        }
    }
    if (!Y.empty()) pair /= static_cast<double>(g.n2.size());

    std::size_t x_count = 0;
    for (const bool b : in_x) x_count += b;
    return facility - pair + p.lambda * static_cast<double>(x_count);
}

inline IndexSet set_from_mask(std::uint32_t mask, std::size_t n) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) s.push_back(static_cast<int>(i));
    }
    return s;
}

/// f(X u Y) for every Y bitmask over n2 (oracle path). n2 must be <= 20.
inline std::vector<double> oracle_all_y_values(const GroundSets& g, const IndexSet& X,
                                               const OutlierParams& p) {
    const std::size_t n2 = g.n2.size();
    std::vector<double> values(std::size_t{1} << n2);
    for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
        values[mask] = oracle_eval_f(g, X, set_from_mask(mask, n2), p);
    }
    return values;
}

inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

/// Exhaustive max of f(X u Y) over |Y| <= k, from a precomputed value table.
inline double oracle_max_y(const std::vector<double>& all_y, int k) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < all_y.size(); ++mask) {
        if (popcount(mask) <= k) best = std::max(best, all_y[mask]);
    }
    return best;
}

struct BruteMinX {
    double value = 0.0;
    IndexSet minimal_minimizer; ///< intersection of all optimal subsets
};

/// Exhaustive minimization of beta*f(X u X_prev) + f(X u Y) over X.
inline BruteMinX oracle_min_x(const GroundSets& g, const IndexSet& X_prev, const IndexSet& Y,
                              const OutlierParams& p) {
    const std::size_t n1 = g.n1.size();
    BruteMinX out;
    out.value = std::numeric_limits<double>::infinity();
    std::uint32_t member_and = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n1); ++mask) {
        const IndexSet x = set_from_mask(mask, n1);
        IndexSet x_union_prev = x;
        for (const int v : X_prev) x_union_prev.push_back(v);
        std::sort(x_union_prev.begin(), x_union_prev.end());
        x_union_prev.erase(std::unique(x_union_prev.begin(), x_union_prev.end()),
                           x_union_prev.end());
        const double value =
            p.beta * oracle_eval_f(g, x_union_prev, {}, p) + oracle_eval_f(g, x, Y, p);
        if (value < out.value - 1e-12) {
            out.value = value;
            member_and = mask;
        } else if (value <= out.value + 1e-12) {
            member_and &= mask;
        }
    }
    out.minimal_minimizer = set_from_mask(member_and, n1);
    return out;
}

inline PointCloud3 random_cloud(Rng& rng, std::size_t n, double extent) {
    PointCloud3 cloud(n);
    for (auto& p : cloud) {
        p = {rng.uniform(-extent, extent), rng.uniform(-extent, extent),
             rng.uniform(-extent, extent)};
    }
    return cloud;
}

/// Random cloud rescaled so every pairwise distance is >= 1 (all scores >= 0).
inline PointCloud3 random_spread_cloud(Rng& rng, std::size_t n, double extent = 5.0) {
    PointCloud3 cloud = random_cloud(rng, n, extent);
    double min_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            min_d = std::min(min_d, explore::distance(cloud[i], cloud[j]));
        }
    }
    if (n >= 2 && min_d > 0.0) {
        const double scale = 1.001 / min_d;
        if (scale > 1.0) {
            for (auto& p : cloud) p = p * scale;
        }
    }
    return cloud;
}

/// Ray-casting point-in-polygon oracle (boundary treated as inside via a
/// distance tolerance), independent of the library's convexity-based test.
inline bool oracle_point_in_polygon(const std::vector<Point2>& poly, const Point2& p,
                                    double boundary_tol = 1e-12) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2& a = poly[j];
        const Point2& b = poly[i];
        // Distance from p to segment [a, b].
        const double lu = b.u - a.u;
        const double lv = b.v - a.v;
        const double len2 = lu * lu + lv * lv;
        double t = len2 > 0.0 ? ((p.u - a.u) * lu + (p.v - a.v) * lv) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double du = p.u - (a.u + t * lu);
        const double dv = p.v - (a.v + t * lv);
        if (std::sqrt(du * du + dv * dv) <= boundary_tol) return true;

        if ((b.v > p.v) != (a.v > p.v)) {
            const double xi = a.u + (p.v - a.v) * (b.u - a.u) / (b.v - a.v);
            if (p.u < xi) inside = !inside;
        }
    }
    return inside;
}

} // namespace testsupport

#endif // EXPLORE_TESTS_SUPPORT_HPP_

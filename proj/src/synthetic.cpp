#include "explore/synthetic.hpp"

#include <cmath>

#include "explore/rng.hpp"

namespace explore {

namespace {

Point3 random_unit_vector(Rng& rng) {
    while (true) {
        const Point3 g{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        const double n = norm(g);
        if (n > 1e-12) return g * (1.0 / n);
    }
}

} // namespace

PlantedCloud planted_outlier_cloud(std::uint64_t seed, int n_inliers, int n_outliers,
                                   double min_radius, double max_radius) {
    Rng rng(seed);
    PlantedCloud out;
    for (int i = 0; i < n_inliers; ++i) {
        const double r = std::cbrt(rng.uniform());
        out.points.push_back(random_unit_vector(rng) * r);
    }
    for (int i = 0; i < n_outliers; ++i) {
        const double r = rng.uniform(min_radius, max_radius);
        out.true_outliers.push_back(static_cast<int>(out.points.size()));
        out.points.push_back(random_unit_vector(rng) * r);
    }
    return out;
}

RingRoom ring_room(std::uint64_t seed, double door_start_deg, double door_width_deg,
                   double radius_lo, double radius_hi, int points_per_degree) {
    Rng rng(seed);
    RingRoom room;
    room.door_start_deg = door_start_deg;
    room.door_width_deg = door_width_deg;

    double radius_sum = 0.0;
    for (int deg = 0; deg < 360; ++deg) {
        // Degrees covered by the door stay empty. The door interval may wrap.
        const double rel = std::fmod(static_cast<double>(deg) - door_start_deg + 720.0, 360.0);
        if (rel < door_width_deg) continue;
        for (int j = 0; j < points_per_degree; ++j) {
            // Keep samples away from bin edges so float rounding cannot move
            // them into a neighboring bin.
            const double angle = (static_cast<double>(deg) + rng.uniform(0.1, 0.9)) *
                                 kTwoPi / 360.0;
            const double radius = rng.uniform(radius_lo, radius_hi);
            room.points.push_back({radius * std::cos(angle), radius * std::sin(angle)});
            radius_sum += radius;
        }
    }
    room.mean_radius = radius_sum / static_cast<double>(room.points.size());
    return room;
}

} // namespace explore

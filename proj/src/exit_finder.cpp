#include "explore/exit_finder.hpp"

#include <cmath>

#include "explore/errors.hpp"

namespace explore {

namespace {
constexpr double kBinWidth = kTwoPi / 360.0;
} // namespace

std::pair<std::vector<AngularBin>, double> bin_points(const std::vector<Point2>& m2d,
                                                      const Point2& x2d, bool r_from_agent,
                                                      kernels::Exec exec) {
    if (m2d.empty()) throw EmptyInputError("bin_points: empty projected map");

    std::vector<int> bin_of;
    kernels::bin_assign(m2d, x2d, bin_of, exec);

    std::vector<AngularBin> bins(360);
    for (int i = 0; i < 360; ++i) bins[static_cast<std::size_t>(i)].index = i;

    double r_sum = 0.0;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < m2d.size(); ++i) {
        if (bin_of[i] < 0) continue; // coincident with the agent, angle undefined
        bins[static_cast<std::size_t>(bin_of[i])].members.push_back(m2d[i]);
        r_sum += r_from_agent ? distance(m2d[i], x2d) : norm(m2d[i]);
        ++assigned;
    }
    if (assigned == 0) {
        throw EmptyInputError("bin_points: every point coincides with the agent position");
    }
    return {std::move(bins), r_sum / static_cast<double>(assigned)};
}

AngularMap build_angular_map(const std::vector<AngularBin>& bins, const Point2& x2d, double r) {
    AngularMap map;
    map.r = r;
    for (const auto& bin : bins) {
        if (bin.members.size() <= 1) continue;
        double sum = 0.0;
        for (const auto& p : bin.members) sum += distance(p, x2d);
        map.covered.push_back(CoveredInterval{
            static_cast<double>(bin.index) * kBinWidth,
            static_cast<double>(bin.index + 1) * kBinWidth,
            sum / static_cast<double>(bin.members.size()),
        });
    }
    return map;
}

GapSegment largest_gap(const AngularMap& map, bool circular) {
    std::array<bool, 360> covered{};
    for (const auto& iv : map.covered) {
        const long bin = std::lround(iv.start / kBinWidth);
        if (bin >= 0 && bin < 360) covered[static_cast<std::size_t>(bin)] = true;
    }

    int covered_count = 0;
    for (const bool c : covered) covered_count += c;
    if (covered_count == 360) {
        throw NoGapError("largest_gap: all 360 bins are covered");
    }
    if (covered_count == 0) {
        return GapSegment{0.0, kTwoPi, kTwoPi / 2.0};
    }

    int best_start = -1;
    int best_len = 0;
    auto consider = [&](int start, int len) {
        if (len > best_len || (len == best_len && start < best_start)) {
            best_start = start;
            best_len = len;
        }
    };

    if (circular) {
        // Scan one full revolution beginning at a covered bin so wrapped runs
        // appear contiguous.
        int anchor = 0;
        while (!covered[static_cast<std::size_t>(anchor)]) ++anchor;
        int run_start = -1;
        int run_len = 0;
        for (int off = 0; off < 360; ++off) {
            const int i = (anchor + off) % 360;
            if (!covered[static_cast<std::size_t>(i)]) {
                if (run_len == 0) run_start = i;
                ++run_len;
            } else if (run_len > 0) {
                consider(run_start, run_len);
                run_len = 0;
            }
        }
        if (run_len > 0) consider(run_start, run_len);
    } else {
        int run_start = -1;
        int run_len = 0;
        for (int i = 0; i < 360; ++i) {
            if (!covered[static_cast<std::size_t>(i)]) {
                if (run_len == 0) run_start = i;
                ++run_len;
            } else if (run_len > 0) {
                consider(run_start, run_len);
                run_len = 0;
            }
        }
        if (run_len > 0) consider(run_start, run_len);
    }

    GapSegment gap;
    gap.start = static_cast<double>(best_start) * kBinWidth;
    gap.end = gap.start + static_cast<double>(best_len) * kBinWidth;
    gap.midpoint = std::fmod(gap.start + 0.5 * static_cast<double>(best_len) * kBinWidth, kTwoPi);
    return gap;
}

ExitPoint find_exit_2d(const std::vector<Point2>& m2d, const Point2& x2d,
                       const AffinePlane& plane, const ExitParams& params, AngularMap* out_map,
                       kernels::Exec exec) {
    auto [bins, r] = bin_points(m2d, x2d, params.r_from_agent, exec);
    AngularMap map = build_angular_map(bins, x2d, r);
    const GapSegment gap = largest_gap(map, params.circular_gap);

    ExitPoint exit;
    exit.angle = gap.midpoint;
    exit.range = r;
    exit.point2 = x2d + Point2{r * std::cos(gap.midpoint), r * std::sin(gap.midpoint)};
    exit.point3 = lift_from_plane(plane, exit.point2);
    if (out_map != nullptr) *out_map = std::move(map);
    return exit;
}

ExitPoint find_exit(const PointCloud3& m3d, const Point3& x3d, const AffinePlane& plane,
                    const ExitParams& params, kernels::Exec exec) {
    if (m3d.empty()) throw EmptyInputError("find_exit: empty map");
    std::vector<Point2> m2d;
    m2d.reserve(m3d.size());
    for (const auto& p : m3d) m2d.push_back(project_point(plane, p));
    const Point2 x2d = project_point(plane, x3d);
    return find_exit_2d(m2d, x2d, plane, params, nullptr, exec);
}

} // namespace explore

#ifndef EXPLORE_IO_HPP_
#define EXPLORE_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "explore/exit_finder.hpp"
#include "explore/geometry.hpp"
#include "explore/obstacles.hpp"
#include "explore/outliers.hpp"
#include "explore/planner.hpp"
#include "explore/sim.hpp"

namespace explore {

/// Per-point annotation carried by the optional fourth CSV column.
enum class PointTag { none, inlier, outlier, closure };

struct TaggedCloud {
    PointCloud3 points;
    std::vector<PointTag> tags; ///< empty when the file has no tag column
};

/// Everything the CLI pipelines need, with the defaults used throughout the
/// experiments (lambda 0.6, k 4, beta 1, K 1000).
struct PipelineConfig {
    OutlierParams outlier;
    ExitParams exit;
    ObstacleParams obstacle;
    PlannerParams planner;
    double sector_radius_scale = 1.0;
    int max_iterations = 20;
    std::string sim_spec;
    std::string output_dir;
};

// Cloud CSV: optional "# format_version=1" comment, header "x,y,z" or
// "x,y,z,tag", one point per line with 17-significant-digit reals, so
// parse(serialize(c)) == c exactly.
TaggedCloud parse_cloud(std::istream& in);
TaggedCloud parse_cloud_file(const std::string& path);
std::string serialize_cloud(const TaggedCloud& cloud);
void write_cloud_file(const std::string& path, const TaggedCloud& cloud);

/// Plane file: 12 whitespace-separated reals, basis column-major then offset.
/// The parsed basis must be orthonormal within 1e-9.
AffinePlane parse_plane_file(const std::string& path);
std::string serialize_plane(const AffinePlane& plane);

EnvironmentSpec parse_env_spec(const std::string& json_text);
EnvironmentSpec parse_env_spec_file(const std::string& path);
std::string serialize_env(const Environment& env);

/// Loads a pipeline config JSON, rejecting unknown keys and out-of-range
/// values. Missing keys keep their defaults.
PipelineConfig parse_config(const std::string& json_text);
PipelineConfig parse_config_file(const std::string& path);

/// Line-delimited JSON, one record per iteration plus a final summary line.
std::string serialize_episode(const EpisodeLog& log);
EpisodeLog parse_episode(std::istream& in);
EpisodeLog parse_episode_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace explore

#endif // EXPLORE_IO_HPP_

#ifndef EXPLORE_KERNELS_HPP_
#define EXPLORE_KERNELS_HPP_

#include <cstdint>
#include <vector>

#include "explore/geometry.hpp"

namespace explore::kernels {

/// Execution policy for the data-parallel kernels. Every kernel writes each
/// output element independently and reductions happen in fixed index order, so
/// the three policies produce bitwise-identical results; `automatic` picks
/// `parallel` when the input is large enough to amortize thread startup.
enum class Exec { serial, parallel, automatic };

/// For every index v with active[v] != 0, writes the best (largest) distance
/// score between cloud[v] and any representative reps[j] of rep_cloud into
/// out[v]. Inactive entries are set to 0. reps must be non-empty.
void best_rep_scores_serial(const PointCloud3& cloud, const std::vector<std::uint8_t>& active,
                            const PointCloud3& rep_cloud, const std::vector<int>& reps,
                            const ScoreParams& sp, std::vector<double>& out);
void best_rep_scores_parallel(const PointCloud3& cloud, const std::vector<std::uint8_t>& active,
                              const PointCloud3& rep_cloud, const std::vector<int>& reps,
                              const ScoreParams& sp, std::vector<double>& out);
void best_rep_scores(const PointCloud3& cloud, const std::vector<std::uint8_t>& active,
                     const PointCloud3& rep_cloud, const std::vector<int>& reps,
                     const ScoreParams& sp, std::vector<double>& out,
                     Exec exec = Exec::automatic);

/// Marginal gain of adding each candidate u of n2 to the representative set Y,
/// holding the retained points of n1 fixed.
///
/// For candidate[u] == 0 the output is set to -infinity. `current_best` holds
/// max score per retained point against the present Y and is read only when
/// y_size > 0; with y_size == 0 the facility part is the plain score sum.
/// The pairwise part subtracts (2 * sum over Y of s(u, w) + s(u, u)) / n2_total.
void greedy_gains_serial(const PointCloud3& n1, const std::vector<std::uint8_t>& active,
                         const PointCloud3& n2, const std::vector<std::uint8_t>& candidate,
                         const std::vector<int>& y, const std::vector<double>& current_best,
                         const ScoreParams& sp, std::vector<double>& out_gains);
void greedy_gains_parallel(const PointCloud3& n1, const std::vector<std::uint8_t>& active,
                           const PointCloud3& n2, const std::vector<std::uint8_t>& candidate,
                           const std::vector<int>& y, const std::vector<double>& current_best,
                           const ScoreParams& sp, std::vector<double>& out_gains);
void greedy_gains(const PointCloud3& n1, const std::vector<std::uint8_t>& active,
                  const PointCloud3& n2, const std::vector<std::uint8_t>& candidate,
                  const std::vector<int>& y, const std::vector<double>& current_best,
                  const ScoreParams& sp, std::vector<double>& out_gains,
                  Exec exec = Exec::automatic);

/// Index of the nearest centroid per point; ties go to the smallest index.
void kmeans_assign_serial(const std::vector<Point2>& points, const std::vector<Point2>& centroids,
                          std::vector<int>& out_assign);
void kmeans_assign_parallel(const std::vector<Point2>& points, const std::vector<Point2>& centroids,
                            std::vector<int>& out_assign);
void kmeans_assign(const std::vector<Point2>& points, const std::vector<Point2>& centroids,
                   std::vector<int>& out_assign, Exec exec = Exec::automatic);

/// One-degree angular bin per point as seen from origin, or -1 when the point
/// coincides with the origin (distance < 1e-12).
void bin_assign_serial(const std::vector<Point2>& points, const Point2& origin,
                       std::vector<int>& out_bins);
void bin_assign_parallel(const std::vector<Point2>& points, const Point2& origin,
                         std::vector<int>& out_bins);
void bin_assign(const std::vector<Point2>& points, const Point2& origin,
                std::vector<int>& out_bins, Exec exec = Exec::automatic);

} // namespace explore::kernels

#endif // EXPLORE_KERNELS_HPP_

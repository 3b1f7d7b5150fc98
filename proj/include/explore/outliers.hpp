#ifndef EXPLORE_OUTLIERS_HPP_
#define EXPLORE_OUTLIERS_HPP_

#include <vector>

#include "explore/geometry.hpp"
#include "explore/kernels.hpp"

namespace explore {

/// Sorted, duplicate-free point indices into a ground set.
using IndexSet = std::vector<int>;

/// The two ground sets of the outlier objective. Normally both are copies of
/// the same cloud; distinct sets are accepted for testing.
struct GroundSets {
    PointCloud3 n1; ///< candidate-outlier ground set
    PointCloud3 n2; ///< representative ground set
};

struct OutlierParams {
    double lambda = 0.6;  ///< weight of the outlier-count term
    int k = 4;            ///< cardinality bound on the representative set Y
    double beta = 1.0;    ///< weight of the already-grown term in the X minimization
    ScoreParams score;
};

/// Exact minimax reference computed by exhaustive enumeration.
struct MinimaxCertificate {
    double tau = 0.0;                ///< min over X of max over |Y| <= k of f(X u Y)
    IndexSet x_star;                 ///< first minimizer in bitmask order
    std::vector<double> per_x_max;   ///< max value for each X, indexed by bitmask over n1
};

struct OutlierResult {
    IndexSet outliers;                   ///< the returned X
    IndexSet inliers;                    ///< n1 indices not in X
    std::vector<double> objective_trace; ///< f(X_{i-1} u Y_i) per iteration
    double normalization_scale = 1.0;    ///< applied cloud scale (1 when normalization is off)
};

/// Value of the outlier objective: the facility term over retained points of
/// n1, minus the pairwise score mass of Y scaled by 1/|n2|, plus lambda*|X|.
/// The facility max over an empty Y is 0, so f of the empty set is 0.
double eval_f(const GroundSets& g, const IndexSet& X, const IndexSet& Y,
              const OutlierParams& params,
              kernels::Exec exec = kernels::Exec::automatic);

/// Greedy maximization of f(X u Y) over Y with |Y| <= k: repeatedly adds the
/// candidate with the largest marginal gain, smallest index on ties, and stops
/// early once the best gain is <= 0.
IndexSet greedy_max_Y(const GroundSets& g, const IndexSet& X, const OutlierParams& params,
                      kernels::Exec exec = kernels::Exec::automatic);

/// Exact minimizer of beta*f(X u X_prev) + f(X u Y) over X. Both terms are
/// modular in X once Y and X_prev are fixed, so the minimum is elementwise:
/// v joins X when its inclusion cost lambda*(1 + beta*[v not in X_prev]) is
/// strictly below its best score against Y; ties stay out.
IndexSet exact_min_X(const GroundSets& g, const IndexSet& X_prev, const IndexSet& Y,
                     const OutlierParams& params,
                     kernels::Exec exec = kernels::Exec::automatic);

/// The iterative X-growing loop: X_0 from the minimization with empty Y, then
/// alternate greedy_max_Y and exact_min_X, growing X until the minimizer adds
/// nothing new. Terminates within |n1| + 1 iterations.
OutlierResult iterative_x_growing(const GroundSets& g, const OutlierParams& params,
                                  kernels::Exec exec = kernels::Exec::automatic);

/// Exhaustive minimax over all X subsets of n1 and all Y with |Y| <= k.
/// Guarded: |n1| <= 16 and at most 1e6 Y candidates.
MinimaxCertificate brute_force_minimax(const GroundSets& g, const OutlierParams& params);

/// Full outlier removal on a cloud: builds both ground sets as copies of the
/// cloud (normalizing first when configured) and runs iterative_x_growing.
OutlierResult remove_outliers(const PointCloud3& cloud, const OutlierParams& params,
                              kernels::Exec exec = kernels::Exec::automatic);

} // namespace explore

#endif // EXPLORE_OUTLIERS_HPP_

#include "explore/outliers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "explore/errors.hpp"

namespace explore {

namespace {

void check_indices(const IndexSet& s, std::size_t ground_size, const char* name) {
    for (const int i : s) {
        if (i < 0 || static_cast<std::size_t>(i) >= ground_size) {
            throw IndexError(std::string(name) + ": index " + std::to_string(i) +
                             " outside ground set of size " + std::to_string(ground_size));
        }
    }
}

std::vector<std::uint8_t> make_mask(const IndexSet& s, std::size_t n, std::uint8_t fill,
                                    std::uint8_t member) {
    std::vector<std::uint8_t> mask(n, fill);
    for (const int i : s) mask[static_cast<std::size_t>(i)] = member;
    return mask;
}

std::size_t count_members(const std::vector<std::uint8_t>& mask, std::uint8_t value) {
    std::size_t c = 0;
    for (const auto m : mask) c += (m == value);
    return c;
}

double pairwise_term(const GroundSets& g, const IndexSet& Y, const OutlierParams& params) {
    if (Y.empty()) return 0.0;
    double sum = 0.0;
    for (const int u : Y) {
        for (const int v : Y) {
            sum += distance_score(g.n2[static_cast<std::size_t>(u)],
                                  g.n2[static_cast<std::size_t>(v)], params.score);
        }
    }
    return sum / static_cast<double>(g.n2.size());
}

} // namespace

double eval_f(const GroundSets& g, const IndexSet& X, const IndexSet& Y,
              const OutlierParams& params, kernels::Exec exec) {
    check_indices(X, g.n1.size(), "eval_f X");
    check_indices(Y, g.n2.size(), "eval_f Y");

    const auto retained = make_mask(X, g.n1.size(), 1, 0);
    double facility = 0.0;
    if (!Y.empty()) {
        std::vector<double> best;
        kernels::best_rep_scores(g.n1, retained, g.n2, Y, params.score, best, exec);
        for (std::size_t v = 0; v < g.n1.size(); ++v) {
            if (retained[v]) facility += best[v];
        }
    }

    const std::size_t x_count = g.n1.size() - count_members(retained, 1);
    return facility - pairwise_term(g, Y, params) +
           params.lambda * static_cast<double>(x_count);
}

IndexSet greedy_max_Y(const GroundSets& g, const IndexSet& X, const OutlierParams& params,
                      kernels::Exec exec) {
    check_indices(X, g.n1.size(), "greedy_max_Y X");
    const auto retained = make_mask(X, g.n1.size(), 1, 0);
    std::vector<std::uint8_t> candidate(g.n2.size(), 1);
    std::vector<double> current_best(g.n1.size(), 0.0);
    std::vector<double> gains;

    IndexSet y;
    while (y.size() < static_cast<std::size_t>(params.k) && y.size() < g.n2.size()) {
        kernels::greedy_gains(g.n1, retained, g.n2, candidate, y, current_best, params.score,
                              gains, exec);
        int best_u = -1;
        double best_gain = 0.0;
        for (std::size_t u = 0; u < gains.size(); ++u) {
            if (!candidate[u]) continue;
            if (best_u < 0 || gains[u] > best_gain) {
                best_u = static_cast<int>(u);
                best_gain = gains[u];
            }
        }
        if (best_u < 0 || best_gain <= 0.0) break;

        for (std::size_t v = 0; v < g.n1.size(); ++v) {
            if (!retained[v]) continue;
            const double s = distance_score(g.n2[static_cast<std::size_t>(best_u)], g.n1[v],
                                            params.score);
            if (s > current_best[v]) current_best[v] = s;
        }
        candidate[static_cast<std::size_t>(best_u)] = 0;
        y.push_back(best_u);
    }
    std::sort(y.begin(), y.end());
    return y;
}

IndexSet exact_min_X(const GroundSets& g, const IndexSet& X_prev, const IndexSet& Y,
                     const OutlierParams& params, kernels::Exec exec) {
    check_indices(X_prev, g.n1.size(), "exact_min_X X_prev");
    check_indices(Y, g.n2.size(), "exact_min_X Y");

    std::vector<double> best(g.n1.size(), 0.0);
    if (!Y.empty()) {
        const std::vector<std::uint8_t> all(g.n1.size(), 1);
        kernels::best_rep_scores(g.n1, all, g.n2, Y, params.score, best, exec);
    }
    const auto in_prev = make_mask(X_prev, g.n1.size(), 0, 1);

    IndexSet x;
    for (std::size_t v = 0; v < g.n1.size(); ++v) {
        const double include_cost = params.lambda * (1.0 + (in_prev[v] ? 0.0 : params.beta));
        if (include_cost < best[v]) x.push_back(static_cast<int>(v));
    }
    return x;
}

OutlierResult iterative_x_growing(const GroundSets& g, const OutlierParams& params,
                                  kernels::Exec exec) {
    OutlierResult result;
    IndexSet x = exact_min_X(g, {}, {}, params, exec);
    std::vector<std::uint8_t> in_x = make_mask(x, g.n1.size(), 0, 1);

    const std::size_t max_rounds = g.n1.size() + 1;
    for (std::size_t i = 1; i <= max_rounds; ++i) {
        const IndexSet y = greedy_max_Y(g, x, params, exec);
        result.objective_trace.push_back(eval_f(g, x, y, params, exec));
        const IndexSet x_new = exact_min_X(g, x, y, params, exec);

        bool grew = false;
        for (const int v : x_new) {
            if (!in_x[static_cast<std::size_t>(v)]) {
                in_x[static_cast<std::size_t>(v)] = 1;
                x.push_back(v);
                grew = true;
            }
        }
        if (!grew) break;
    }

    std::sort(x.begin(), x.end());
    result.outliers = x;
    for (std::size_t v = 0; v < g.n1.size(); ++v) {
        if (!in_x[v]) result.inliers.push_back(static_cast<int>(v));
    }
    return result;
}

namespace {

void collect_subsets_up_to_k(std::size_t n, std::size_t k, std::vector<IndexSet>& out) {
    out.push_back({});
    IndexSet cur;
    // Iterative combination enumeration per size, ascending lexicographic.
    for (std::size_t size = 1; size <= std::min(k, n); ++size) {
        cur.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) cur[i] = static_cast<int>(i);
        while (true) {
            out.push_back(cur);
            // Advance to the next combination.
            std::size_t i = size;
            while (i > 0 &&
                   cur[i - 1] == static_cast<int>(n - size + i - 1)) {
                --i;
            }
            if (i == 0) break;
            ++cur[i - 1];
            for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
}

std::size_t count_subsets_up_to_k(std::size_t n, std::size_t k, std::size_t limit) {
    std::size_t total = 0;
    double binom = 1.0;
    for (std::size_t size = 0; size <= std::min(k, n); ++size) {
        if (size > 0) binom = binom * static_cast<double>(n - size + 1) / static_cast<double>(size);
        total += static_cast<std::size_t>(binom);
        if (total > limit) return limit + 1;
    }
    return total;
}

} // namespace

MinimaxCertificate brute_force_minimax(const GroundSets& g, const OutlierParams& params) {
    const std::size_t n1 = g.n1.size();
    const std::size_t n2 = g.n2.size();
    if (n1 > 16) {
        throw InstanceTooLargeError("brute_force_minimax: |N1| = " + std::to_string(n1) +
                                    " exceeds the enumeration guard of 16");
    }
    constexpr std::size_t kYLimit = 1000000;
    if (count_subsets_up_to_k(n2, static_cast<std::size_t>(params.k), kYLimit) > kYLimit) {
        throw InstanceTooLargeError("brute_force_minimax: too many Y candidates");
    }

    std::vector<IndexSet> y_candidates;
    collect_subsets_up_to_k(n2, static_cast<std::size_t>(params.k), y_candidates);

    MinimaxCertificate cert;
    const std::size_t num_x = static_cast<std::size_t>(1) << n1;
    cert.per_x_max.resize(num_x);
    std::size_t best_mask = 0;
    for (std::size_t mask = 0; mask < num_x; ++mask) {
        IndexSet x;
        for (std::size_t v = 0; v < n1; ++v) {
            if (mask & (static_cast<std::size_t>(1) << v)) x.push_back(static_cast<int>(v));
        }
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& y : y_candidates) {
            worst = std::max(worst, eval_f(g, x, y, params, kernels::Exec::serial));
        }
        cert.per_x_max[mask] = worst;
        if (mask == 0 || worst < cert.per_x_max[best_mask]) best_mask = mask;
    }
    cert.tau = cert.per_x_max[best_mask];
    for (std::size_t v = 0; v < n1; ++v) {
        if (best_mask & (static_cast<std::size_t>(1) << v)) {
            cert.x_star.push_back(static_cast<int>(v));
        }
    }
    return cert;
}

OutlierResult remove_outliers(const PointCloud3& cloud, const OutlierParams& params,
                              kernels::Exec exec) {
    if (cloud.empty()) throw EmptyInputError("remove_outliers: empty cloud");

    PointCloud3 working = cloud;
    double scale = 1.0;
    if (params.score.normalize) {
        scale = normalize_median_distance(working, params.score.epsilon);
    }
    GroundSets g{working, working};
    OutlierResult result = iterative_x_growing(g, params, exec);
    result.normalization_scale = scale;
    return result;
}

} // namespace explore

/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_METRICS_HPP
#define HYPERCUT_METRICS_HPP

#include <optional>
#include <set>
#include <vector>

#include "hypercut/features.hpp"

namespace hypercut {

struct GroundTruth {
    std::set<int> relevant; // frame indices
};

struct MetricsReport {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double speedup_deviation = 0.0;
    double shaking_ratio = 0.0;
};

struct F1Result {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Frame-level precision/recall/F1 of the selected frames against the ground
// truth. Empty selections score zero precision; F1 is 0 when p + r = 0.
F1Result f1_score(const std::vector<int>& selected, const GroundTruth& truth);

// |S - F / selected_count|
double speedup_deviation(std::size_t frame_count, std::size_t selected_count,
                         double target);

// Mean normalized center motion over the output transitions. Transitions
// whose homography failed (empty optional) contribute the largest valid
// motion as a penalty; when every transition failed the result is +infinity
// and a warning is logged.
double shaking_ratio(const std::vector<std::optional<double>>& displacements,
                     double half_diag);

// Center displacement for each consecutive selected pair, composed by
// summing the per-step displacements across the skip; a failed step makes
// the whole transition a failure.
std::vector<std::optional<double>> compose_output_displacements(
    const std::vector<int>& selected, const TransitionFeatures& features);

} // namespace hypercut

#endif // HYPERCUT_METRICS_HPP

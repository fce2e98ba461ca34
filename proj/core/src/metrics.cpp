/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/metrics.hpp"

#include <cmath>
#include <iostream>
#include <limits>

#include "hypercut/errors.hpp"

namespace hypercut {

F1Result f1_score(const std::vector<int>& selected, const GroundTruth& truth) {
    if (truth.relevant.empty()) {
        throw EmptyGroundTruth("ground truth has no relevant frames");
    }
    std::size_t hits = 0;
    for (int f : selected) {
        if (truth.relevant.count(f) != 0) {
            ++hits;
        }
    }
    F1Result result;
    result.precision = selected.empty()
                           ? 0.0
                           : static_cast<double>(hits) /
                                 static_cast<double>(selected.size());
    result.recall = static_cast<double>(hits) /
                    static_cast<double>(truth.relevant.size());
    const double denom = result.precision + result.recall;
    result.f1 = denom > 0.0 ? 2.0 * result.precision * result.recall / denom
                            : 0.0;
    return result;
}

double speedup_deviation(std::size_t frame_count, std::size_t selected_count,
                         double target) {
    if (selected_count == 0) {
        throw DegeneratePlan("no frames selected");
    }
    return std::abs(target - static_cast<double>(frame_count) /
                                 static_cast<double>(selected_count));
}

double shaking_ratio(const std::vector<std::optional<double>>& displacements,
                     double half_diag) {
    if (displacements.empty()) {
        throw DegeneratePlan(
            "shaking ratio needs at least one output transition");
    }
    double max_valid = -1.0;
    for (const auto& d : displacements) {
        if (d && *d > max_valid) {
            max_valid = *d;
        }
    }
    if (max_valid < 0.0) {
        std::cerr << "warning: every homography failed; shaking ratio is "
                     "undefined and reported as infinity\n";
        return std::numeric_limits<double>::infinity();
    }
    double sum = 0.0;
    for (const auto& d : displacements) {
        sum += d ? *d : max_valid;
    }
    return sum / static_cast<double>(displacements.size()) / half_diag;
}

std::vector<std::optional<double>> compose_output_displacements(
    const std::vector<int>& selected, const TransitionFeatures& features) {
    std::vector<std::optional<double>> out;
    if (selected.size() < 2) {
        return out;
    }
    out.reserve(selected.size() - 1);
    for (std::size_t n = 0; n + 1 < selected.size(); ++n) {
        double sum = 0.0;
        bool ok = true;
        for (int f = selected[n]; f < selected[n + 1]; ++f) {
            const auto& step = features.center_disp[static_cast<std::size_t>(f)];
            if (!step) {
                ok = false;
                break;
            }
            sum += *step;
        }
        out.push_back(ok ? std::optional<double>(sum) : std::nullopt);
    }
    return out;
}

} // namespace hypercut

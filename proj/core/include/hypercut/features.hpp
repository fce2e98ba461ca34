/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_FEATURES_HPP
#define HYPERCUT_FEATURES_HPP

#include <optional>
#include <vector>

namespace hypercut {

// Precomputed per-frame motion and appearance features. Pixel-level work
// (optical flow, homographies, histogramming) happens upstream; this is the
// numeric record the selector consumes.
struct TransitionFeatures {
    // distance of the focus of expansion to the frame center, normalized by
    // the half-diagonal; one value per frame
    std::vector<double> foe_dist;
    // mean optical-flow magnitude between frames f and f+1; F-1 values
    std::vector<double> flow_mag;
    // per-frame per-channel color histograms (raw counts)
    std::vector<std::vector<std::vector<double>>> histograms;
    // frame-center displacement under the f -> f+1 homography, in pixels;
    // empty optional = estimation failed; F-1 values
    std::vector<std::optional<double>> center_disp;
    // half of the frame diagonal, in pixels
    double half_diag = 1.0;

    std::size_t frame_count() const { return foe_dist.size(); }
};

} // namespace hypercut

#endif // HYPERCUT_FEATURES_HPP

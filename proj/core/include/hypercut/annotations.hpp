/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_ANNOTATIONS_HPP
#define HYPERCUT_ANNOTATIONS_HPP

#include <optional>
#include <string>
#include <vector>

namespace hypercut {

struct BoundingBox {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    long long pixel_count() const {
        return static_cast<long long>(width) * height;
    }
};

// One captioned region of interest produced by an upstream captioner.
struct Region {
    std::string caption;
    double confidence = 0.0;
    BoundingBox bbox;
    std::optional<double> attention; // precomputed viewer-attention weight
};

// Per-frame saliency probabilities; `scale` maps frame pixels to grid cells
// when the grid is downscaled (grid_x = floor(pixel_x * scale)).
struct SaliencyGrid {
    int width = 0;
    int height = 0;
    double scale = 1.0;
    std::vector<double> values; // row-major, height rows of width

    double at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
};

struct FrameAnnotation {
    int frame_index = 0;
    std::vector<Region> regions;
    std::optional<SaliencyGrid> saliency;
};

struct VideoAnnotations {
    std::vector<FrameAnnotation> frames; // ordered, indices 0..F-1
    double fps = 30.0;

    std::size_t frame_count() const { return frames.size(); }
};

} // namespace hypercut

#endif // HYPERCUT_ANNOTATIONS_HPP

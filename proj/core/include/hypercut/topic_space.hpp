/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_TOPIC_SPACE_HPP
#define HYPERCUT_TOPIC_SPACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypercut/embedding.hpp"

namespace hypercut {

// K cluster centroids over the embedding space. Each centroid is one topic
// of interest; concepts map to the nearest centroid.
struct TopicSpace {
    std::vector<double> centroids; // row-major K x dimension
    std::size_t topic_count = 0;
    std::size_t dimension = 0;
    std::uint64_t seed = 0;
    // mean squared point-to-assigned-centroid distance at convergence
    double inertia = 0.0;
    // inertia measured at every assignment step; non-increasing
    std::vector<double> inertia_trace;

    std::span<const double> centroid(std::size_t k) const {
        return {centroids.data() + k * dimension, dimension};
    }
};

// Seeded k-means++ followed by Lloyd iterations. Stops when no assignment
// changes or after max_iterations. Empty clusters are re-seeded with the
// point farthest from its assigned centroid. Bitwise reproducible for a
// fixed (table, k, seed).
TopicSpace build_topic_space(const EmbeddingTable& table, std::size_t k,
                             std::uint64_t seed, std::size_t max_iterations = 300);

// l(w): index of the nearest centroid in Euclidean distance; ties resolve
// to the lowest index.
std::size_t assign_topic(std::span<const double> vector, const TopicSpace& space);

// Text artifact: header `K d seed`, then K centroid lines.
void save_topic_space(const TopicSpace& space, const std::string& path);
TopicSpace load_topic_space(const std::string& path);

} // namespace hypercut

#endif // HYPERCUT_TOPIC_SPACE_HPP

/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/topic_space.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hypercut/errors.hpp"
#include "hypercut/rng.hpp"

namespace hypercut {

namespace {

double dist2(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        acc += diff * diff;
    }
    return acc;
}

std::size_t nearest_centroid(std::span<const double> point,
                             const std::vector<double>& centroids,
                             std::size_t k, std::size_t dim,
                             double* best_out = nullptr) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
        const double d =
            dist2(point, {centroids.data() + c * dim, dim});
        if (d < best_d) { // strict: ties keep the lowest index
            best_d = d;
            best = c;
        }
    }
    if (best_out != nullptr) {
        *best_out = best_d;
    }
    return best;
}

// k-means++ seeding: first centroid uniform, the rest D^2-weighted.
std::vector<double> seed_centroids(const EmbeddingTable& table, std::size_t k,
                                   Rng& rng) {
    const std::size_t n = table.size();
    const std::size_t dim = table.dimension();
    std::vector<double> centroids;
    centroids.reserve(k * dim);

    const std::size_t first = rng.next_index(n);
    const auto v0 = table.vector(first);
    centroids.insert(centroids.end(), v0.begin(), v0.end());

    std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
    for (std::size_t c = 1; c < k; ++c) {
        const std::span<const double> last{
            centroids.data() + (c - 1) * dim, dim};
        for (std::size_t i = 0; i < n; ++i) {
            min_d2[i] = std::min(min_d2[i], dist2(table.vector(i), last));
        }
        const std::size_t pick = rng.weighted_index(min_d2);
        const auto v = table.vector(pick);
        centroids.insert(centroids.end(), v.begin(), v.end());
    }
    return centroids;
}

} // namespace

TopicSpace build_topic_space(const EmbeddingTable& table, std::size_t k,
                             std::uint64_t seed, std::size_t max_iterations) {
    const std::size_t n = table.size();
    const std::size_t dim = table.dimension();
    if (k == 0) {
        throw InvalidK("topic count must be at least 1");
    }
    if (k > n) {
        throw TooManyClusters("topic count " + std::to_string(k) +
                              " exceeds vocabulary size " + std::to_string(n));
    }

    Rng rng(seed);
    TopicSpace space;
    space.topic_count = k;
    space.dimension = dim;
    space.seed = seed;
    space.centroids = seed_centroids(table, k, rng);

    std::vector<std::size_t> assignment(n, k); // k = unassigned marker
    std::vector<double> point_d2(n, 0.0);
    std::vector<double> sums(k * dim, 0.0);
    std::vector<std::size_t> counts(k, 0);

    bool capped = true;
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        // assignment step
        bool changed = false;
        double inertia_acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = 0.0;
            const std::size_t c =
                nearest_centroid(table.vector(i), space.centroids, k, dim, &d);
            point_d2[i] = d;
            inertia_acc += d;
            if (c != assignment[i]) {
                assignment[i] = c;
                changed = true;
            }
        }
        space.inertia_trace.push_back(inertia_acc / static_cast<double>(n));
        if (!changed) {
            capped = false;
            break;
        }

        // update step
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = table.vector(i);
            double* row = sums.data() + assignment[i] * dim;
            for (std::size_t j = 0; j < dim; ++j) {
                row[j] += v[j];
            }
            ++counts[assignment[i]];
        }
        std::vector<std::size_t> empties;
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) {
                empties.push_back(c);
                continue;
            }
            const double inv = 1.0 / static_cast<double>(counts[c]);
            for (std::size_t j = 0; j < dim; ++j) {
                space.centroids[c * dim + j] = sums[c * dim + j] * inv;
            }
        }
        // re-seed empty clusters with the point farthest from its centroid
        if (!empties.empty()) {
            std::vector<bool> used(n, false);
            for (const std::size_t c : empties) {
                std::size_t far_i = 0;
                double far_d = -1.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (used[i]) {
                        continue;
                    }
                    const double d = dist2(
                        table.vector(i),
                        {space.centroids.data() + assignment[i] * dim, dim});
                    if (d > far_d) {
                        far_d = d;
                        far_i = i;
                    }
                }
                used[far_i] = true;
                const auto v = table.vector(far_i);
                std::copy(v.begin(), v.end(),
                          space.centroids.begin() +
                              static_cast<std::ptrdiff_t>(c * dim));
            }
        }
    }

    if (capped) {
        // centroids moved after the last recorded assignment; measure again
        double inertia_acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            inertia_acc += dist2(
                table.vector(i),
                {space.centroids.data() + assignment[i] * dim, dim});
        }
        space.inertia_trace.push_back(inertia_acc / static_cast<double>(n));
    }
    space.inertia = space.inertia_trace.back();
    return space;
}

std::size_t assign_topic(std::span<const double> vector,
                         const TopicSpace& space) {
    if (vector.size() != space.dimension) {
        throw DimensionMismatch(
            "vector dimension " + std::to_string(vector.size()) +
            " does not match topic space dimension " +
            std::to_string(space.dimension));
    }
    return nearest_centroid(vector, space.centroids, space.topic_count,
                            space.dimension);
}

void save_topic_space(const TopicSpace& space, const std::string& path) {
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (out == nullptr) {
        throw ParseError("cannot open for writing: " + path);
    }
    std::fprintf(out, "%zu %zu %" PRIu64 "\n", space.topic_count,
                 space.dimension, space.seed);
    for (std::size_t c = 0; c < space.topic_count; ++c) {
        const auto q = space.centroid(c);
        for (std::size_t j = 0; j < q.size(); ++j) {
            std::fprintf(out, j == 0 ? "%.17g" : " %.17g", q[j]);
        }
        std::fprintf(out, "\n");
    }
    std::fclose(out);
}

TopicSpace load_topic_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open topic space file: " + path);
    }
    TopicSpace space;
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(path + ": missing header", 1);
    }
    {
        std::istringstream ss(line);
        if (!(ss >> space.topic_count >> space.dimension >> space.seed)) {
            throw ParseError(path + ": bad header '" + line + "'", 1);
        }
    }
    space.centroids.reserve(space.topic_count * space.dimension);
    for (std::size_t c = 0; c < space.topic_count; ++c) {
        if (!std::getline(in, line)) {
            throw ParseError(path + ": expected " +
                                 std::to_string(space.topic_count) +
                                 " centroid lines",
                             static_cast<long>(c + 2));
        }
        std::istringstream ss(line);
        double v = 0.0;
        std::size_t got = 0;
        while (ss >> v) {
            space.centroids.push_back(v);
            ++got;
        }
        if (got != space.dimension) {
            throw DimensionMismatch(path + ": centroid line " +
                                        std::to_string(c + 2) + " has " +
                                        std::to_string(got) + " values",
                                    static_cast<long>(c + 2));
        }
    }
    return space;
}

} // namespace hypercut

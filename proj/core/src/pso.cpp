/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/pso.hpp"

#include <algorithm>
#include <cmath>

#include "hypercut/errors.hpp"
#include "hypercut/rng.hpp"

namespace hypercut {

PsoResult pso_maximize(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> lower, std::span<const double> upper,
    const PsoOptions& options,
    std::optional<std::span<const double>> seed_point) {
    const std::size_t dims = lower.size();
    if (dims == 0 || upper.size() != dims) {
        throw Error("pso bounds must be non-empty and of equal size");
    }
    for (std::size_t d = 0; d < dims; ++d) {
        if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]) ||
            lower[d] > upper[d]) {
            throw Error("pso bounds must be finite with lower <= upper");
        }
    }
    if (options.swarm_size < 1 || options.iterations < 0) {
        throw Error("pso needs at least one particle and a non-negative "
                    "iteration count");
    }

    Rng rng(options.seed);
    const std::size_t swarm = static_cast<std::size_t>(options.swarm_size);

    std::vector<std::vector<double>> position(swarm,
                                              std::vector<double>(dims, 0.0));
    std::vector<std::vector<double>> velocity(swarm,
                                              std::vector<double>(dims, 0.0));
    std::vector<std::vector<double>> best_position = position;
    std::vector<double> best_value(swarm, 0.0);

    const auto evaluate = [&](std::span<const double> x) {
        const double v = objective(x);
        if (!std::isfinite(v)) {
            throw ObjectiveError("objective returned a non-finite value");
        }
        return v;
    };

    for (std::size_t p = 0; p < swarm; ++p) {
        for (std::size_t d = 0; d < dims; ++d) {
            position[p][d] = rng.uniform(lower[d], upper[d]);
        }
    }
    if (seed_point) {
        if (seed_point->size() != dims) {
            throw Error("pso seed point dimension mismatch");
        }
        for (std::size_t d = 0; d < dims; ++d) {
            position[0][d] = std::clamp((*seed_point)[d], lower[d], upper[d]);
        }
    }

    PsoResult result;
    std::size_t global_best = 0;
    for (std::size_t p = 0; p < swarm; ++p) {
        best_position[p] = position[p];
        best_value[p] = evaluate(position[p]);
        if (best_value[p] > best_value[global_best]) {
            global_best = p;
        }
    }
    result.best_position = best_position[global_best];
    result.best_value = best_value[global_best];
    result.trace.push_back(result.best_value);

    for (int iter = 0; iter < options.iterations; ++iter) {
        for (std::size_t p = 0; p < swarm; ++p) {
            for (std::size_t d = 0; d < dims; ++d) {
                const double r1 = rng.next_double();
                const double r2 = rng.next_double();
                velocity[p][d] =
                    options.inertia * velocity[p][d] +
                    options.cognitive * r1 * (best_position[p][d] - position[p][d]) +
                    options.social * r2 * (result.best_position[d] - position[p][d]);
                position[p][d] = std::clamp(position[p][d] + velocity[p][d],
                                            lower[d], upper[d]);
            }
            const double value = evaluate(position[p]);
            if (value > best_value[p]) {
                best_value[p] = value;
                best_position[p] = position[p];
                if (value > result.best_value) {
                    result.best_value = value;
                    result.best_position = position[p];
                }
            }
        }
        result.trace.push_back(result.best_value);
    }
    return result;
}

} // namespace hypercut

/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_PSO_HPP
#define HYPERCUT_PSO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hypercut {

struct PsoOptions {
    int swarm_size = 30;
    int iterations = 200;
    double inertia = 0.72;
    double cognitive = 1.49;
    double social = 1.49;
    std::uint64_t seed = 1;
};

struct PsoResult {
    std::vector<double> best_position;
    double best_value = 0.0;
    // global best after initialization and after every iteration
    std::vector<double> trace;
};

// Global-best particle swarm maximization over a box. Positions stay clamped
// inside [lower, upper]; runs are deterministic for a fixed seed. A non-finite
// objective value at any particle raises ObjectiveError. An optional seed
// point replaces the first particle's initial position, which guarantees the
// result is at least as good as that incumbent.
PsoResult pso_maximize(const std::function<double(std::span<const double>)>& objective,
                       std::span<const double> lower,
                       std::span<const double> upper, const PsoOptions& options,
                       std::optional<std::span<const double>> seed_point = {});

} // namespace hypercut

#endif // HYPERCUT_PSO_HPP

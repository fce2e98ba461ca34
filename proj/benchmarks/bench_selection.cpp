/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <benchmark/benchmark.h>

#include "hypercut/planner.hpp"
#include "hypercut/rng.hpp"
#include "hypercut/selector.hpp"

namespace {

using namespace hypercut;

TransitionFeatures bench_features(std::size_t frames, std::uint64_t seed) {
    Rng rng(seed);
    TransitionFeatures features;
    features.half_diag = 400.0;
    for (std::size_t f = 0; f < frames; ++f) {
        features.foe_dist.push_back(rng.uniform(0.0, 0.5));
        std::vector<std::vector<double>> hist(2, std::vector<double>(16, 0.0));
        for (auto& channel : hist) {
            for (double& b : channel) {
                b = rng.uniform(0.0, 100.0);
            }
        }
        features.histograms.push_back(std::move(hist));
        if (f + 1 < frames) {
            features.flow_mag.push_back(rng.uniform(0.5, 1.5));
            features.center_disp.push_back(rng.uniform(0.0, 4.0));
        }
    }
    return features;
}

void BM_SelectFrames(benchmark::State& state) {
    const std::size_t frames = static_cast<std::size_t>(state.range(0));
    const auto features = bench_features(frames, 17);
    Rng rng(23);
    InterestProfile profile;
    for (std::size_t f = 0; f < frames; ++f) {
        profile.scores.push_back(rng.next_double());
    }
    const CostWeights weights;
    const TransitionCostModel model(profile, features, weights);
    Segment segment;
    segment.start = 0;
    segment.end = static_cast<int>(frames) - 1;
    segment.speedup = 10;
    for (auto _ : state) {
        auto selected = select_frames(segment, model, 100);
        benchmark::DoNotOptimize(selected);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelectFrames)->Range(128, 2048)->Complexity();

void BM_SolveSpeedups(benchmark::State& state) {
    for (auto _ : state) {
        auto solution = solve_speedups(1000, 4000, 10, 0.1, 0.1,
                                       static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(solution);
    }
}
BENCHMARK(BM_SolveSpeedups)->Arg(50)->Arg(100)->Arg(200);

} // namespace

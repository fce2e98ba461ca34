/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "hypercut/frame_score.hpp"
#include "hypercut/rng.hpp"
#include "hypercut/topic_space.hpp"

namespace {

using namespace hypercut;

EmbeddingTable synthetic_table(std::size_t words, std::size_t dim,
                               std::uint64_t seed) {
    Rng rng(seed);
    EmbeddingTable table;
    for (std::size_t i = 0; i < words; ++i) {
        std::vector<double> v;
        for (std::size_t d = 0; d < dim; ++d) {
            v.push_back(rng.uniform(-10.0, 10.0));
        }
        table.add("w" + std::to_string(i), std::move(v));
    }
    return table;
}

VideoAnnotations synthetic_video(std::size_t frames, std::size_t vocab,
                                 std::uint64_t seed) {
    Rng rng(seed);
    VideoAnnotations video;
    for (std::size_t f = 0; f < frames; ++f) {
        FrameAnnotation frame;
        frame.frame_index = static_cast<int>(f);
        const std::size_t regions = rng.next_index(3);
        for (std::size_t r = 0; r < regions; ++r) {
            Region region;
            region.caption = "w" + std::to_string(rng.next_index(vocab)) +
                             " w" + std::to_string(rng.next_index(vocab));
            region.confidence = rng.next_double();
            region.attention = rng.next_double();
            region.bbox = {0, 0, 32, 32};
            frame.regions.push_back(std::move(region));
        }
        video.frames.push_back(std::move(frame));
    }
    return video;
}

void BM_BuildTopicSpace(benchmark::State& state) {
    const auto table =
        synthetic_table(static_cast<std::size_t>(state.range(0)), 16, 3);
    for (auto _ : state) {
        auto space = build_topic_space(table, 16, 11);
        benchmark::DoNotOptimize(space);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTopicSpace)->Range(64, 1024)->Complexity();

void BM_ScoreVideo(benchmark::State& state) {
    const std::size_t vocab = 256;
    const auto table = synthetic_table(vocab, 16, 3);
    const auto space = build_topic_space(table, 16, 11);
    const auto video =
        synthetic_video(static_cast<std::size_t>(state.range(0)), vocab, 5);
    BagOfTopics user;
    user.weights.assign(space.topic_count, 0.0);
    user.weights[3] = 5.0;
    user.weights[7] = 2.0;
    ConceptFilter filter;
    const ScoringContext ctx{space, table, filter, TfIdfMode::Literal};
    for (auto _ : state) {
        auto profile = score_video(user, video, ctx);
        benchmark::DoNotOptimize(profile);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScoreVideo)->Range(256, 4096)->Complexity();

} // namespace

/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_PIPELINE_HPP
#define HYPERCUT_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypercut/io.hpp"
#include "hypercut/metrics.hpp"
#include "hypercut/planner.hpp"
#include "hypercut/pso.hpp"
#include "hypercut/selector.hpp"

namespace hypercut {

struct PipelinePaths {
    std::string embeddings;
    std::string topic_space; // loaded when present, otherwise built and saved
    std::string lexicon;     // empty: keep all sentences (with a warning)
    std::string stopwords;
    std::string nouns;       // empty: no noun restriction
    std::string posts;
    std::string user_bot;    // precomputed profile; overrides posts
    std::string annotations;
    std::string features;
    std::string truth;       // empty: skip the metrics stage
};

struct TuneCase {
    std::string posts;
    std::string annotations;
    std::string features;
    std::string truth;
};

struct TuneConfig {
    std::vector<TuneCase> cases;
    // order: lambda1, lambda2, lambda_s, lambda_i, lambda_m, lambda_a
    std::vector<double> lower{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    std::vector<double> upper{2.0, 2.0, 10.0, 10.0, 10.0, 10.0};
    PsoOptions pso{/*swarm_size=*/16, /*iterations=*/24};
};

struct PipelineConfig {
    int target_speedup = 10;        // S
    std::size_t topic_count = 8192; // K
    std::uint64_t seed = 13;        // clustering seed
    int window = 0;                 // frames per segment; 0 = 4 * fps
    ThresholdStrategy strategy{};
    int tau = 100;                  // max frame skip
    RefinementConfig refinement{};  // gamma = 0.2
    double lambda1 = 0.01; // see PlanParams on the lambda1/lambda2 balance
    double lambda2 = 0.1;
    int max_rate = 100; // S_max
    CostWeights weights{};
    TfIdfMode tfidf_mode = TfIdfMode::Literal;
    double shaking_blend = 0.5; // objective = F1 - blend * shaking ratio
    PipelinePaths paths;
    TuneConfig tune;
};

PipelineConfig load_config(const std::string& path);

struct PipelineResult {
    BagOfTopics user_bot;
    InterestProfile profile;
    PlanOutcome outcome;
    SelectionPlan plan;
    std::optional<MetricsReport> report;
    double fps = 30.0;
};

// Full pipeline: embeddings -> topic space -> user profile -> frame scores
// -> segment plan -> frame selection -> metrics (when ground truth exists).
// Writes profile.txt, segments.txt, plan.json, plan_indices.txt and
// metrics.json into out_dir when it is non-empty.
PipelineResult run_pipeline(const PipelineConfig& config,
                            const std::string& out_dir = "");

struct TuneResult {
    PsoResult pso;
    double default_objective = 0.0; // objective at the config's lambdas
};

// PSO over (lambda1, lambda2, lambda_s, lambda_i, lambda_m, lambda_a),
// maximizing mean(F1 - shaking_blend * shaking ratio) over the tune cases.
// Frame scoring does not depend on the lambdas, so profiles are computed
// once per case. The first particle starts at the config's current lambdas.
TuneResult tune_lambdas(const PipelineConfig& config);

} // namespace hypercut

#endif // HYPERCUT_PIPELINE_HPP

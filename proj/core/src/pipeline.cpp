/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "hypercut/errors.hpp"
#include "hypercut/text.hpp"

namespace hypercut {

using nlohmann::json;

namespace {

ThresholdStrategy parse_strategy(const json& node) {
    ThresholdStrategy strategy;
    const std::string kind = node.value("strategy", "mean");
    if (kind == "mean") {
        strategy.kind = ThresholdStrategy::Kind::Mean;
    } else if (kind == "percentile") {
        strategy.kind = ThresholdStrategy::Kind::Percentile;
    } else if (kind == "otsu") {
        strategy.kind = ThresholdStrategy::Kind::Otsu;
    } else {
        throw ParseError("unknown threshold strategy '" + kind + "'");
    }
    strategy.percentile = node.value("percentile", 80.0);
    return strategy;
}

} // namespace

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config: " + path);
    }
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }

    PipelineConfig cfg;
    try {
        cfg.target_speedup = root.value("target_speedup", cfg.target_speedup);
        cfg.topic_count = root.value("topics", cfg.topic_count);
        cfg.seed = root.value("seed", cfg.seed);
        cfg.window = root.value("window", cfg.window);
        if (root.contains("threshold")) {
            cfg.strategy = parse_strategy(root.at("threshold"));
        }
        cfg.tau = root.value("tau", cfg.tau);
        if (root.contains("refinement")) {
            const json& r = root.at("refinement");
            cfg.refinement.gamma = r.value("gamma", cfg.refinement.gamma);
            cfg.refinement.max_levels =
                r.value("max_levels", cfg.refinement.max_levels);
        }
        cfg.lambda1 = root.value("lambda1", cfg.lambda1);
        cfg.lambda2 = root.value("lambda2", cfg.lambda2);
        cfg.max_rate = root.value("max_rate", cfg.max_rate);
        if (root.contains("cost_weights")) {
            const json& w = root.at("cost_weights");
            cfg.weights.lambda_s = w.value("lambda_s", cfg.weights.lambda_s);
            cfg.weights.lambda_i = w.value("lambda_i", cfg.weights.lambda_i);
            cfg.weights.lambda_m = w.value("lambda_m", cfg.weights.lambda_m);
            cfg.weights.lambda_a = w.value("lambda_a", cfg.weights.lambda_a);
            cfg.weights.epsilon = w.value("epsilon", cfg.weights.epsilon);
        }
        const std::string tfidf = root.value("tfidf", "literal");
        if (tfidf == "literal") {
            cfg.tfidf_mode = TfIdfMode::Literal;
        } else if (tfidf == "document_frequency") {
            cfg.tfidf_mode = TfIdfMode::DocumentFrequency;
        } else {
            throw ParseError("unknown tfidf mode '" + tfidf + "'");
        }
        cfg.shaking_blend = root.value("shaking_blend", cfg.shaking_blend);
        if (root.contains("paths")) {
            const json& p = root.at("paths");
            cfg.paths.embeddings = p.value("embeddings", "");
            cfg.paths.topic_space = p.value("topic_space", "");
            cfg.paths.lexicon = p.value("lexicon", "");
            cfg.paths.stopwords = p.value("stopwords", "");
            cfg.paths.nouns = p.value("nouns", "");
            cfg.paths.posts = p.value("posts", "");
            cfg.paths.user_bot = p.value("user_bot", "");
            cfg.paths.annotations = p.value("annotations", "");
            cfg.paths.features = p.value("features", "");
            cfg.paths.truth = p.value("truth", "");
        }
        if (root.contains("tune")) {
            const json& t = root.at("tune");
            cfg.tune.pso.swarm_size = t.value("swarm", cfg.tune.pso.swarm_size);
            cfg.tune.pso.iterations =
                t.value("iterations", cfg.tune.pso.iterations);
            cfg.tune.pso.seed = t.value("seed", cfg.tune.pso.seed);
            if (t.contains("lower")) {
                cfg.tune.lower = t.at("lower").get<std::vector<double>>();
            }
            if (t.contains("upper")) {
                cfg.tune.upper = t.at("upper").get<std::vector<double>>();
            }
            for (const json& c : t.value("cases", json::array())) {
                TuneCase tc;
                tc.posts = c.at("posts").get<std::string>();
                tc.annotations = c.at("annotations").get<std::string>();
                tc.features = c.at("features").get<std::string>();
                tc.truth = c.at("truth").get<std::string>();
                cfg.tune.cases.push_back(std::move(tc));
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }

    if (cfg.target_speedup < 1 || cfg.tau < 1 || cfg.refinement.gamma <= 0.0 ||
        cfg.weights.epsilon <= 0.0) {
        throw ParseError(path + ": invalid parameter values");
    }
    return cfg;
}

namespace {

struct LoadedInputs {
    EmbeddingTable table;
    TopicSpace space;
    ConceptFilter filter;
    SentimentLexicon lexicon;
    bool have_lexicon = false;
};

LoadedInputs load_shared_inputs(const PipelineConfig& cfg) {
    LoadedInputs inputs;
    inputs.table = load_embeddings(cfg.paths.embeddings);
    if (!cfg.paths.topic_space.empty() &&
        std::filesystem::exists(cfg.paths.topic_space)) {
        inputs.space = load_topic_space(cfg.paths.topic_space);
        if (inputs.space.dimension != inputs.table.dimension()) {
            throw DimensionMismatch(
                cfg.paths.topic_space + ": topic space dimension " +
                std::to_string(inputs.space.dimension) +
                " does not match embedding dimension " +
                std::to_string(inputs.table.dimension()));
        }
    } else {
        inputs.space = build_topic_space(inputs.table, cfg.topic_count, cfg.seed);
        if (!cfg.paths.topic_space.empty()) {
            save_topic_space(inputs.space, cfg.paths.topic_space);
        }
    }
    if (!cfg.paths.stopwords.empty()) {
        inputs.filter.stopwords = load_token_set(cfg.paths.stopwords);
    }
    if (!cfg.paths.nouns.empty()) {
        inputs.filter.nouns = load_token_set(cfg.paths.nouns);
    }
    if (!cfg.paths.lexicon.empty()) {
        inputs.lexicon = load_lexicon(cfg.paths.lexicon);
        inputs.have_lexicon = true;
    }
    return inputs;
}

BagOfTopics user_bot_from_posts(const LoadedInputs& inputs,
                                const std::string& posts_path) {
    const PostCorpus corpus = load_posts(posts_path);
    std::vector<std::string> sentences;
    if (inputs.have_lexicon) {
        sentences = filter_positive(corpus, inputs.lexicon);
    } else {
        std::cerr << "warning: no sentiment lexicon configured; keeping all "
                     "sentences\n";
        for (const std::string& post : corpus.posts) {
            for (std::string& s : split_sentences(post)) {
                sentences.push_back(std::move(s));
            }
        }
    }
    const ConceptDocument doc =
        extract_concepts(sentences, inputs.table, inputs.filter);
    return build_user_bot(doc, inputs.space, inputs.table);
}

PlanParams plan_params(const PipelineConfig& cfg, double fps) {
    PlanParams params;
    params.target_speedup = cfg.target_speedup;
    params.window = cfg.window > 0
                        ? cfg.window
                        : std::max(1, static_cast<int>(std::lround(4.0 * fps)));
    params.strategy = cfg.strategy;
    params.lambda1 = cfg.lambda1;
    params.lambda2 = cfg.lambda2;
    params.max_rate = cfg.max_rate;
    params.refinement = cfg.refinement;
    return params;
}

SelectionPlan select_plan(const std::vector<Segment>& segments,
                          const InterestProfile& profile,
                          const TransitionFeatures& features,
                          const CostWeights& weights, int tau) {
    const TransitionCostModel model(profile, features, weights);
    std::vector<std::vector<int>> per_segment;
    per_segment.reserve(segments.size());
    for (const Segment& seg : segments) {
        per_segment.push_back(select_frames(seg, model, tau));
    }
    return compose(per_segment, profile.frame_count());
}

MetricsReport evaluate_plan(const SelectionPlan& plan,
                            const TransitionFeatures& features,
                            const GroundTruth& truth, int target) {
    MetricsReport report;
    const F1Result f1 = f1_score(plan.selected, truth);
    report.precision = f1.precision;
    report.recall = f1.recall;
    report.f1 = f1.f1;
    report.speedup_deviation = speedup_deviation(
        plan.frame_count, plan.selected.size(), static_cast<double>(target));
    report.shaking_ratio = shaking_ratio(
        compose_output_displacements(plan.selected, features),
        features.half_diag);
    return report;
}

} // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg,
                            const std::string& out_dir) {
    const LoadedInputs inputs = load_shared_inputs(cfg);

    PipelineResult result;
    if (!cfg.paths.user_bot.empty()) {
        result.user_bot = load_user_bot(cfg.paths.user_bot);
        if (result.user_bot.topic_count() != inputs.space.topic_count) {
            throw TopicCountMismatch(
                cfg.paths.user_bot + ": profile has " +
                std::to_string(result.user_bot.topic_count()) +
                " topics, space has " +
                std::to_string(inputs.space.topic_count));
        }
    } else {
        result.user_bot = user_bot_from_posts(inputs, cfg.paths.posts);
    }

    const VideoAnnotations video = load_annotations(cfg.paths.annotations);
    result.fps = video.fps;
    const ScoringContext ctx{inputs.space, inputs.table, inputs.filter,
                             cfg.tfidf_mode};
    result.profile = score_video(result.user_bot, video, ctx);

    result.outcome = plan_segments(result.profile, plan_params(cfg, video.fps));

    const TransitionFeatures features = load_features(cfg.paths.features);
    if (features.frame_count() != video.frame_count()) {
        throw Error(cfg.paths.features + " covers " +
                    std::to_string(features.frame_count()) + " frames but " +
                    cfg.paths.annotations + " covers " +
                    std::to_string(video.frame_count()));
    }
    result.plan = select_plan(result.outcome.segments, result.profile, features,
                              cfg.weights, cfg.tau);

    if (!cfg.paths.truth.empty()) {
        result.report = evaluate_plan(result.plan, features,
                                      load_truth(cfg.paths.truth),
                                      cfg.target_speedup);
    }

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        const auto path = [&](const std::string& name) {
            return (std::filesystem::path(out_dir) / name).string();
        };
        save_profile(result.profile, path("profile.txt"));
        save_segments(result.outcome.segments, path("segments.txt"));
        save_plan(result.plan, result.outcome.segments, cfg.target_speedup,
                  path("plan.json"));
        save_plan_indices(result.plan, path("plan_indices.txt"));
        if (result.report) {
            save_metrics(*result.report, path("metrics.json"));
        }
    }
    return result;
}

TuneResult tune_lambdas(const PipelineConfig& cfg) {
    if (cfg.tune.cases.empty()) {
        throw Error("tuning needs at least one case");
    }
    if (cfg.tune.lower.size() != 6 || cfg.tune.upper.size() != 6) {
        throw Error("tuning bounds must have six entries: lambda1, lambda2, "
                    "lambda_s, lambda_i, lambda_m, lambda_a");
    }
    const LoadedInputs inputs = load_shared_inputs(cfg);

    struct PreparedCase {
        InterestProfile profile;
        TransitionFeatures features;
        GroundTruth truth;
        double fps = 30.0;
    };
    std::vector<PreparedCase> prepared;
    prepared.reserve(cfg.tune.cases.size());
    for (const TuneCase& tc : cfg.tune.cases) {
        PreparedCase pc;
        const BagOfTopics bot = user_bot_from_posts(inputs, tc.posts);
        const VideoAnnotations video = load_annotations(tc.annotations);
        const ScoringContext ctx{inputs.space, inputs.table, inputs.filter,
                                 cfg.tfidf_mode};
        pc.profile = score_video(bot, video, ctx);
        pc.features = load_features(tc.features);
        if (pc.features.frame_count() != video.frame_count()) {
            throw Error(tc.features + " covers " +
                        std::to_string(pc.features.frame_count()) +
                        " frames but " + tc.annotations + " covers " +
                        std::to_string(video.frame_count()));
        }
        pc.truth = load_truth(tc.truth);
        pc.fps = video.fps;
        prepared.push_back(std::move(pc));
    }

    const auto objective = [&](std::span<const double> lambdas) {
        PipelineConfig trial = cfg;
        trial.lambda1 = lambdas[0];
        trial.lambda2 = lambdas[1];
        trial.weights.lambda_s = lambdas[2];
        trial.weights.lambda_i = lambdas[3];
        trial.weights.lambda_m = lambdas[4];
        trial.weights.lambda_a = lambdas[5];
        double sum = 0.0;
        for (const PreparedCase& pc : prepared) {
            const PlanOutcome outcome =
                plan_segments(pc.profile, plan_params(trial, pc.fps));
            const SelectionPlan plan =
                select_plan(outcome.segments, pc.profile, pc.features,
                            trial.weights, trial.tau);
            const MetricsReport report = evaluate_plan(
                plan, pc.features, pc.truth, trial.target_speedup);
            sum += report.f1 - cfg.shaking_blend * report.shaking_ratio;
        }
        return sum / static_cast<double>(prepared.size());
    };

    const std::vector<double> incumbent{
        cfg.lambda1,           cfg.lambda2,           cfg.weights.lambda_s,
        cfg.weights.lambda_i,  cfg.weights.lambda_m,  cfg.weights.lambda_a};

    TuneResult result;
    result.default_objective = objective(incumbent);
    result.pso = pso_maximize(objective, cfg.tune.lower, cfg.tune.upper,
                              cfg.tune.pso, std::span<const double>(incumbent));
    return result;
}

} // namespace hypercut

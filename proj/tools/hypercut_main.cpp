/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hypercut/errors.hpp"
#include "hypercut/io.hpp"
#include "hypercut/pipeline.hpp"
#include "hypercut/synthetic.hpp"
#include "hypercut/text.hpp"

namespace fs = std::filesystem;
using hypercut::PipelineConfig;
using nlohmann::json;

namespace {

struct GlobalOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
};

PipelineConfig effective_config(const GlobalOptions& global) {
    PipelineConfig cfg;
    if (!global.config_path.empty()) {
        cfg = hypercut::load_config(global.config_path);
    }
    if (global.seed) {
        cfg.seed = *global.seed;
    }
    return cfg;
}

std::string out_path(const GlobalOptions& global, const std::string& name) {
    fs::create_directories(global.out_dir);
    return (fs::path(global.out_dir) / name).string();
}

hypercut::SyntheticSpec load_synth_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw hypercut::ParseError("cannot open synthetic spec: " + path);
    }
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw hypercut::ParseError(path + ": " + e.what());
    }
    hypercut::SyntheticSpec spec;
    try {
        spec.frames = root.value("frames", spec.frames);
        spec.fps = root.value("fps", spec.fps);
        spec.width = root.value("width", spec.width);
        spec.height = root.value("height", spec.height);
        spec.concepts = root.value("concepts", spec.concepts);
        spec.noise_region_rate =
            root.value("noise_region_rate", spec.noise_region_rate);
        spec.motion_noise = root.value("motion_noise", spec.motion_noise);
        spec.homography_failure_prob = root.value("homography_failure_prob",
                                                  spec.homography_failure_prob);
        spec.seed = root.value("seed", spec.seed);
        spec.vocab_seed = root.value("vocab_seed", spec.vocab_seed);
        for (const json& p : root.value("planted", json::array())) {
            hypercut::PlantedSegment seg;
            seg.start = p.at("start").get<int>();
            seg.end = p.at("end").get<int>();
            seg.concept_word = p.at("concept").get<std::string>();
            seg.density = p.value("density", 1.0);
            spec.planted.push_back(std::move(seg));
        }
    } catch (const json::exception& e) {
        throw hypercut::ParseError(path + ": " + e.what());
    }
    return spec;
}

int run_build_space(const GlobalOptions& global, PipelineConfig cfg) {
    const auto table = hypercut::load_embeddings(cfg.paths.embeddings);
    const auto space =
        hypercut::build_topic_space(table, cfg.topic_count, cfg.seed);
    const std::string target = cfg.paths.topic_space.empty()
                                   ? out_path(global, "space.txt")
                                   : cfg.paths.topic_space;
    hypercut::save_topic_space(space, target);
    std::cerr << "built " << space.topic_count << " topics over "
              << table.size() << " embeddings (inertia " << space.inertia
              << ") -> " << target << "\n";
    return 0;
}

int run_profile_user(const GlobalOptions& global, PipelineConfig cfg) {
    const auto table = hypercut::load_embeddings(cfg.paths.embeddings);
    hypercut::TopicSpace space;
    if (!cfg.paths.topic_space.empty() &&
        fs::exists(cfg.paths.topic_space)) {
        space = hypercut::load_topic_space(cfg.paths.topic_space);
    } else {
        space = hypercut::build_topic_space(table, cfg.topic_count, cfg.seed);
    }
    hypercut::ConceptFilter filter;
    if (!cfg.paths.stopwords.empty()) {
        filter.stopwords = hypercut::load_token_set(cfg.paths.stopwords);
    }
    if (!cfg.paths.nouns.empty()) {
        filter.nouns = hypercut::load_token_set(cfg.paths.nouns);
    }
    const auto corpus = hypercut::load_posts(cfg.paths.posts);
    std::vector<std::string> sentences;
    if (!cfg.paths.lexicon.empty()) {
        sentences = hypercut::filter_positive(
            corpus, hypercut::load_lexicon(cfg.paths.lexicon));
    } else {
        std::cerr << "warning: no sentiment lexicon; keeping all sentences\n";
        for (const auto& post : corpus.posts) {
            for (auto& s : hypercut::split_sentences(post)) {
                sentences.push_back(std::move(s));
            }
        }
    }
    const auto doc = hypercut::extract_concepts(sentences, table, filter);
    const auto bot = hypercut::build_user_bot(doc, space, table);
    const std::string target = out_path(global, "user_bot.txt");
    hypercut::save_user_bot(bot, target);
    std::cerr << "profiled " << doc.concepts.size() << " concepts -> "
              << target << "\n";
    return 0;
}

int run_score(const GlobalOptions& global, PipelineConfig cfg) {
    const auto table = hypercut::load_embeddings(cfg.paths.embeddings);
    hypercut::TopicSpace space;
    if (!cfg.paths.topic_space.empty() && fs::exists(cfg.paths.topic_space)) {
        space = hypercut::load_topic_space(cfg.paths.topic_space);
    } else {
        space = hypercut::build_topic_space(table, cfg.topic_count, cfg.seed);
    }
    hypercut::ConceptFilter filter;
    if (!cfg.paths.stopwords.empty()) {
        filter.stopwords = hypercut::load_token_set(cfg.paths.stopwords);
    }
    if (!cfg.paths.nouns.empty()) {
        filter.nouns = hypercut::load_token_set(cfg.paths.nouns);
    }
    const auto bot = hypercut::load_user_bot(cfg.paths.user_bot);
    const auto video = hypercut::load_annotations(cfg.paths.annotations);
    const hypercut::ScoringContext ctx{space, table, filter, cfg.tfidf_mode};
    const auto profile = hypercut::score_video(bot, video, ctx);
    const std::string target = out_path(global, "profile.txt");
    hypercut::save_profile(profile, target);
    std::cerr << "scored " << profile.frame_count() << " frames -> " << target
              << "\n";
    return 0;
}

int run_evaluate(const GlobalOptions& global, PipelineConfig cfg,
                 const std::string& plan_path) {
    const auto file = hypercut::load_plan(plan_path);
    const auto features = hypercut::load_features(cfg.paths.features);
    hypercut::MetricsReport report;
    const auto truth = hypercut::load_truth(cfg.paths.truth);
    const auto f1 = hypercut::f1_score(file.plan.selected, truth);
    report.precision = f1.precision;
    report.recall = f1.recall;
    report.f1 = f1.f1;
    report.speedup_deviation = hypercut::speedup_deviation(
        file.plan.frame_count, file.plan.selected.size(),
        static_cast<double>(file.target_speedup));
    report.shaking_ratio = hypercut::shaking_ratio(
        hypercut::compose_output_displacements(file.plan.selected, features),
        features.half_diag);
    hypercut::save_metrics(report, out_path(global, "metrics.json"));
    hypercut::print_metrics(report, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"personalized fast-forward planning for first-person video"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--config", global.config_path, "pipeline config (JSON)");
    app.add_option("--out", global.out_dir, "output directory");
    std::uint64_t seed_value = 0;
    auto* seed_opt =
        app.add_option("--seed", seed_value, "override the clustering seed");

    // path/value overrides shared by the subcommands
    std::string embeddings, space_path, lexicon, stopwords, nouns, posts,
        user_bot, annotations, features_path, truth, profile_path,
        segments_path, plan_path, spec_path;
    int target = 0;
    std::size_t topics = 0;
    int window = -1;
    int tau = 0;
    double fps = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--embeddings", embeddings, "embedding table file");
        sub->add_option("--space", space_path, "topic space artifact");
        sub->add_option("--lexicon", lexicon, "sentiment lexicon file");
        sub->add_option("--stopwords", stopwords, "stopword file");
        sub->add_option("--nouns", nouns, "noun whitelist file");
        sub->add_option("--topics", topics, "number of topics (K)");
    };

    auto* cmd_build = app.add_subcommand("build-space",
                                         "cluster embeddings into topics");
    add_common(cmd_build);

    auto* cmd_profile =
        app.add_subcommand("profile-user", "posts -> user bag of topics");
    add_common(cmd_profile);
    cmd_profile->add_option("--posts", posts, "user posts, one per line");

    auto* cmd_score =
        app.add_subcommand("score", "annotations + user profile -> score curve");
    add_common(cmd_score);
    cmd_score->add_option("--user-bot", user_bot, "user profile file");
    cmd_score->add_option("--annotations", annotations, "frame annotations");

    auto* cmd_plan =
        app.add_subcommand("plan", "score curve -> segments and speed-ups");
    cmd_plan->add_option("--profile", profile_path, "score curve file")
        ->required();
    cmd_plan->add_option("--target", target, "target speed-up S");
    cmd_plan->add_option("--window", window, "segment window in frames");
    cmd_plan->add_option("--fps", fps, "frames per second (window default)");

    auto* cmd_select =
        app.add_subcommand("select", "segments + features -> selected frames");
    cmd_select->add_option("--profile", profile_path, "score curve file")
        ->required();
    cmd_select->add_option("--segments", segments_path, "segment plan file")
        ->required();
    cmd_select->add_option("--features", features_path, "transition features")
        ->required();
    cmd_select->add_option("--target", target, "target speed-up S");
    cmd_select->add_option("--tau", tau, "maximum frame skip");

    auto* cmd_eval =
        app.add_subcommand("evaluate", "plan + ground truth -> metrics");
    cmd_eval->add_option("--plan", plan_path, "plan JSON")->required();
    cmd_eval->add_option("--features", features_path, "transition features");
    cmd_eval->add_option("--truth", truth, "relevant frame indices");

    auto* cmd_synth =
        app.add_subcommand("synth", "generate a synthetic desk-scale corpus");
    cmd_synth->add_option("--spec", spec_path, "synthetic spec (JSON)")
        ->required();

    auto* cmd_tune =
        app.add_subcommand("tune", "PSO over the lambda parameters");

    auto* cmd_run = app.add_subcommand("run", "full pipeline from config");
    add_common(cmd_run);
    cmd_run->add_option("--posts", posts, "user posts, one per line");
    cmd_run->add_option("--user-bot", user_bot, "precomputed user profile");
    cmd_run->add_option("--annotations", annotations, "frame annotations");
    cmd_run->add_option("--features", features_path, "transition features");
    cmd_run->add_option("--truth", truth, "relevant frame indices");
    cmd_run->add_option("--target", target, "target speed-up S");
    cmd_run->add_option("--window", window, "segment window in frames");
    cmd_run->add_option("--tau", tau, "maximum frame skip");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seed_opt->count() > 0) {
            global.seed = seed_value;
        }
        PipelineConfig cfg = effective_config(global);
        if (!embeddings.empty()) cfg.paths.embeddings = embeddings;
        if (!space_path.empty()) cfg.paths.topic_space = space_path;
        if (!lexicon.empty()) cfg.paths.lexicon = lexicon;
        if (!stopwords.empty()) cfg.paths.stopwords = stopwords;
        if (!nouns.empty()) cfg.paths.nouns = nouns;
        if (!posts.empty()) cfg.paths.posts = posts;
        if (!user_bot.empty()) cfg.paths.user_bot = user_bot;
        if (!annotations.empty()) cfg.paths.annotations = annotations;
        if (!features_path.empty()) cfg.paths.features = features_path;
        if (!truth.empty()) cfg.paths.truth = truth;
        if (topics > 0) cfg.topic_count = topics;
        if (target > 0) cfg.target_speedup = target;
        if (window >= 0) cfg.window = window;
        if (tau > 0) cfg.tau = tau;

        if (cmd_build->parsed()) {
            return run_build_space(global, cfg);
        }
        if (cmd_profile->parsed()) {
            return run_profile_user(global, cfg);
        }
        if (cmd_score->parsed()) {
            return run_score(global, cfg);
        }
        if (cmd_plan->parsed()) {
            const auto profile = hypercut::load_profile(profile_path);
            hypercut::PlanParams params;
            params.target_speedup = cfg.target_speedup;
            const double effective_fps = fps > 0.0 ? fps : 30.0;
            params.window =
                cfg.window > 0
                    ? cfg.window
                    : std::max(1, static_cast<int>(std::lround(
                                      4.0 * effective_fps)));
            params.strategy = cfg.strategy;
            params.lambda1 = cfg.lambda1;
            params.lambda2 = cfg.lambda2;
            params.max_rate = cfg.max_rate;
            params.refinement = cfg.refinement;
            const auto outcome = hypercut::plan_segments(profile, params);
            const std::string out = out_path(global, "segments.txt");
            hypercut::save_segments(outcome.segments, out);
            std::cerr << "planned " << outcome.segments.size()
                      << " segments (threshold " << outcome.threshold
                      << ", rates " << outcome.solution.relevant_rate << "/"
                      << outcome.solution.nonrelevant_rate << ") -> " << out
                      << "\n";
            return 0;
        }
        if (cmd_select->parsed()) {
            const auto profile = hypercut::load_profile(profile_path);
            const auto segments = hypercut::load_segments(segments_path);
            const auto features = hypercut::load_features(features_path);
            const hypercut::TransitionCostModel model(profile, features,
                                                      cfg.weights);
            std::vector<std::vector<int>> per_segment;
            for (const auto& seg : segments) {
                per_segment.push_back(
                    hypercut::select_frames(seg, model, cfg.tau));
            }
            const auto plan =
                hypercut::compose(per_segment, profile.frame_count());
            hypercut::save_plan(plan, segments, cfg.target_speedup,
                                out_path(global, "plan.json"));
            hypercut::save_plan_indices(plan,
                                        out_path(global, "plan_indices.txt"));
            std::cerr << "selected " << plan.selected.size() << " of "
                      << plan.frame_count << " frames (rate "
                      << plan.achieved_rate << ")\n";
            return 0;
        }
        if (cmd_eval->parsed()) {
            return run_evaluate(global, cfg, plan_path);
        }
        if (cmd_synth->parsed()) {
            const auto spec = load_synth_spec(spec_path);
            const auto corpus = hypercut::gen_synthetic(spec, global.out_dir);
            std::cerr << "synthetic corpus written to " << global.out_dir
                      << " (suggested topics: " << corpus.suggested_topics
                      << ")\n";
            return 0;
        }
        if (cmd_tune->parsed()) {
            const auto result = hypercut::tune_lambdas(cfg);
            json out;
            out["default_objective"] = result.default_objective;
            out["best_objective"] = result.pso.best_value;
            out["best_lambdas"] = {
                {"lambda1", result.pso.best_position[0]},
                {"lambda2", result.pso.best_position[1]},
                {"lambda_s", result.pso.best_position[2]},
                {"lambda_i", result.pso.best_position[3]},
                {"lambda_m", result.pso.best_position[4]},
                {"lambda_a", result.pso.best_position[5]}};
            out["trace"] = result.pso.trace;
            std::ofstream file(out_path(global, "tune.json"));
            file << out.dump(2) << "\n";
            std::cerr << "tuned objective " << result.pso.best_value
                      << " (default " << result.default_objective << ")\n";
            return 0;
        }
        if (cmd_run->parsed()) {
            const auto result = hypercut::run_pipeline(cfg, global.out_dir);
            std::cerr << "plan: " << result.plan.selected.size() << " of "
                      << result.plan.frame_count << " frames (rate "
                      << result.plan.achieved_rate << ")\n";
            if (result.report) {
                hypercut::print_metrics(*result.report, std::cout);
            }
            return 0;
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const hypercut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hypercut/io.hpp"

namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* bin = std::getenv("HYPERCUT_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "HYPERCUT_BIN must point at the CLI");
    return bin;
}

int run(const std::string& args) {
    const std::string cmd = binary() + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Workspace {
    fs::path root;
    Workspace() {
        root = fs::temp_directory_path() / "hypercut_cli_test";
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~Workspace() { fs::remove_all(root); }
    std::string dir(const std::string& name) const {
        return (root / name).string();
    }
    std::string file(const std::string& name) const {
        return (root / name).string();
    }
};

} // namespace

TEST_CASE("the CLI drives the whole pipeline stage by stage") {
    Workspace ws;

    // synthetic corpus
    const std::string spec_path = ws.file("spec.json");
    {
        std::ofstream out(spec_path);
        out << R"({
          "frames": 600, "fps": 30.0, "seed": 4, "vocab_seed": 2,
          "concepts": ["car", "tree"],
          "planted": [
            {"start": 120, "end": 239, "concept": "car", "density": 0.9},
            {"start": 360, "end": 479, "concept": "tree", "density": 0.9}
          ],
          "noise_region_rate": 0.3,
          "motion_noise": 0.1,
          "homography_failure_prob": 0.01
        })";
    }
    const std::string corpus = ws.dir("corpus");
    REQUIRE(run("--out " + corpus + " synth --spec " + spec_path) == 0);
    REQUIRE(fs::exists(corpus + "/annotations.jsonl"));
    REQUIRE(fs::exists(corpus + "/features.jsonl"));
    REQUIRE(fs::exists(corpus + "/posts_car.txt"));
    REQUIRE(fs::exists(corpus + "/truth_car.txt"));

    const std::string stage = ws.dir("stage");

    // build-space
    REQUIRE(run("--out " + stage + " --seed 13 build-space --embeddings " +
                corpus + "/embeddings.txt --topics 5") == 0);
    REQUIRE(fs::exists(stage + "/space.txt"));

    // profile-user
    REQUIRE(run("--out " + stage + " profile-user --embeddings " + corpus +
                "/embeddings.txt --space " + stage + "/space.txt --posts " +
                corpus + "/posts_car.txt --lexicon " + corpus +
                "/lexicon.txt --stopwords " + corpus + "/stopwords.txt") == 0);
    REQUIRE(fs::exists(stage + "/user_bot.txt"));

    // score
    REQUIRE(run("--out " + stage + " score --embeddings " + corpus +
                "/embeddings.txt --space " + stage +
                "/space.txt --user-bot " + stage + "/user_bot.txt --stopwords " +
                corpus + "/stopwords.txt --annotations " + corpus +
                "/annotations.jsonl") == 0);
    REQUIRE(fs::exists(stage + "/profile.txt"));
    const auto profile = hypercut::load_profile(stage + "/profile.txt");
    REQUIRE(profile.frame_count() == 600);

    // plan
    REQUIRE(run("--out " + stage + " plan --profile " + stage +
                "/profile.txt --target 10 --fps 30") == 0);
    REQUIRE(fs::exists(stage + "/segments.txt"));

    // select
    REQUIRE(run("--out " + stage + " select --profile " + stage +
                "/profile.txt --segments " + stage +
                "/segments.txt --features " + corpus +
                "/features.jsonl --target 10") == 0);
    REQUIRE(fs::exists(stage + "/plan.json"));
    REQUIRE(fs::exists(stage + "/plan_indices.txt"));

    // evaluate
    REQUIRE(run("--out " + stage + " evaluate --plan " + stage +
                "/plan.json --features " + corpus +
                "/features.jsonl --truth " + corpus + "/truth_car.txt") == 0);
    REQUIRE(fs::exists(stage + "/metrics.json"));
    {
        std::ifstream in(stage + "/metrics.json");
        nlohmann::json metrics;
        in >> metrics;
        CHECK(metrics.at("f1").get<double>() > 0.0);
        CHECK(metrics.at("speedup_deviation").get<double>() <= 1.5);
    }

    // full run via config, twice, byte-identical
    const std::string cfg_path = ws.file("config.json");
    {
        std::ofstream out(cfg_path);
        out << R"({
          "target_speedup": 10, "topics": 5, "seed": 13,
          "paths": {
            "embeddings": ")" << corpus << R"(/embeddings.txt",
            "lexicon": ")" << corpus << R"(/lexicon.txt",
            "stopwords": ")" << corpus << R"(/stopwords.txt",
            "posts": ")" << corpus << R"(/posts_car.txt",
            "annotations": ")" << corpus << R"(/annotations.jsonl",
            "features": ")" << corpus << R"(/features.jsonl",
            "truth": ")" << corpus << R"(/truth_car.txt"
          }
        })";
    }
    const std::string run_a = ws.dir("run_a");
    const std::string run_b = ws.dir("run_b");
    REQUIRE(run("--config " + cfg_path + " --out " + run_a + " run") == 0);
    REQUIRE(run("--config " + cfg_path + " --out " + run_b + " run") == 0);
    for (const char* name : {"plan.json", "profile.txt", "metrics.json"}) {
        CHECK(slurp(run_a + "/" + name) == slurp(run_b + "/" + name));
    }

    // tune
    const std::string tune_cfg = ws.file("tune_config.json");
    {
        std::ofstream out(tune_cfg);
        out << R"({
          "target_speedup": 10, "topics": 5, "seed": 13,
          "paths": {
            "embeddings": ")" << corpus << R"(/embeddings.txt",
            "lexicon": ")" << corpus << R"(/lexicon.txt",
            "stopwords": ")" << corpus << R"(/stopwords.txt"
          },
          "tune": {
            "swarm": 4, "iterations": 2, "seed": 3,
            "cases": [{
              "posts": ")" << corpus << R"(/posts_car.txt",
              "annotations": ")" << corpus << R"(/annotations.jsonl",
              "features": ")" << corpus << R"(/features.jsonl",
              "truth": ")" << corpus << R"(/truth_car.txt"
            }]
          }
        })";
    }
    const std::string tuned = ws.dir("tuned");
    REQUIRE(run("--config " + tune_cfg + " --out " + tuned + " tune") == 0);
    {
        std::ifstream in(tuned + "/tune.json");
        nlohmann::json report;
        in >> report;
        CHECK(report.at("best_objective").get<double>() >=
              report.at("default_objective").get<double>());
        CHECK(report.at("best_lambdas").size() == 6);
    }
}

TEST_CASE("the CLI distinguishes validation failures from internal errors") {
    Workspace ws;
    // missing file -> input validation -> exit 2
    CHECK(run("build-space --embeddings " + ws.file("absent.txt")) == 2);
    // unknown flag -> parse error -> exit 2
    CHECK(run("build-space --no-such-flag") == 2);
    // no subcommand -> exit 2
    CHECK(run("") == 2);
}

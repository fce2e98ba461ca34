/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypercut/io.hpp"
#include "hypercut/synthetic.hpp"
#include "testutil.hpp"

using namespace hypercut;
using testutil::TempDir;

namespace {

SyntheticSpec small_spec() {
    SyntheticSpec spec;
    spec.frames = 240;
    spec.fps = 30.0;
    spec.concepts = {"car", "tree"};
    spec.planted = {{40, 79, "car", 1.0}, {160, 199, "tree", 0.8}};
    spec.noise_region_rate = 0.4;
    spec.motion_noise = 0.1;
    spec.homography_failure_prob = 0.0;
    spec.seed = 5;
    spec.vocab_seed = 2;
    return spec;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("gen_synthetic is byte-identical for identical specs") {
    TempDir a("synth_a");
    TempDir b("synth_b");
    const auto spec = small_spec();
    gen_synthetic(spec, a.str());
    gen_synthetic(spec, b.str());
    for (const auto& entry : std::filesystem::directory_iterator(a.str())) {
        const auto name = entry.path().filename().string();
        CHECK(slurp(entry.path().string()) == slurp(b.str() + "/" + name));
    }
}

TEST_CASE("density 1.0 plants a region on every planted frame") {
    TempDir dir("synth");
    const auto spec = small_spec();
    const auto corpus = gen_synthetic(spec, dir.str());
    const auto video = load_annotations(corpus.annotations);
    REQUIRE(video.frame_count() == 240);
    const auto synonyms = concept_synonyms("car");
    for (int f = 40; f <= 79; ++f) {
        const auto& regions = video.frames[static_cast<std::size_t>(f)].regions;
        bool planted = false;
        for (const auto& region : regions) {
            for (const auto& w : synonyms) {
                if (region.caption.find(w) != std::string::npos) {
                    planted = true;
                }
            }
        }
        CHECK(planted);
    }
}

TEST_CASE("homography failure probability controls missing displacements") {
    TempDir dir("synth");
    SUBCASE("zero probability leaves no gaps") {
        auto spec = small_spec();
        spec.homography_failure_prob = 0.0;
        const auto corpus = gen_synthetic(spec, dir.str());
        const auto features = load_features(corpus.features);
        for (const auto& d : features.center_disp) {
            CHECK(d.has_value());
        }
    }
    SUBCASE("probability one fails every transition") {
        auto spec = small_spec();
        spec.homography_failure_prob = 1.0;
        const auto corpus = gen_synthetic(spec, dir.str());
        const auto features = load_features(corpus.features);
        for (const auto& d : features.center_disp) {
            CHECK(!d.has_value());
        }
    }
}

TEST_CASE("ground truth matches the planted ranges") {
    TempDir dir("synth");
    const auto corpus = gen_synthetic(small_spec(), dir.str());
    const auto car = load_truth(corpus.truth.at("car"));
    CHECK(car.relevant.size() == 40);
    CHECK(car.relevant.count(40) == 1);
    CHECK(car.relevant.count(79) == 1);
    CHECK(car.relevant.count(80) == 0);
    const auto tree = load_truth(corpus.truth.at("tree"));
    CHECK(tree.relevant.size() == 40);
    CHECK(tree.relevant.count(160) == 1);
}

TEST_CASE("the corpus is self-consistent and loadable") {
    TempDir dir("synth");
    const auto corpus = gen_synthetic(small_spec(), dir.str());
    const auto table = load_embeddings(corpus.embeddings);
    CHECK(table.size() > 10);
    CHECK(corpus.suggested_topics == 5); // 2 concepts + 3 filler clusters
    const auto features = load_features(corpus.features);
    CHECK(features.frame_count() == 240);
    const auto posts = load_posts(corpus.posts.at("car"));
    CHECK(posts.posts.size() == 24);
    // every concept synonym used in posts is in the vocabulary
    const auto lexicon = load_lexicon(corpus.lexicon);
    CHECK(lexicon.valence("love") > 0);
}

TEST_CASE("planted ranges outside the video are rejected") {
    TempDir dir("synth");
    auto spec = small_spec();
    spec.planted.push_back({200, 500, "car", 1.0});
    CHECK_THROWS(gen_synthetic(spec, dir.str()));
}

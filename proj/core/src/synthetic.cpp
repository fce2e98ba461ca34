/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "hypercut/errors.hpp"
#include "hypercut/io.hpp"
#include "hypercut/rng.hpp"

namespace hypercut {

namespace {

const std::map<std::string, std::vector<std::string>>& synonym_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"car", {"car", "truck", "bus", "van", "taxi"}},
        {"tree", {"tree", "plant", "flower", "grass", "leaf"}},
        {"chair", {"chair", "table", "sofa", "bench", "couch"}},
        {"computer", {"computer", "laptop", "keyboard", "screen", "monitor"}},
        {"people", {"people", "man", "woman", "person", "crowd"}},
    };
    return table;
}

const std::vector<std::vector<std::string>>& filler_clusters() {
    static const std::vector<std::vector<std::string>> fillers = {
        {"sky", "cloud", "sun", "rain", "fog"},
        {"road", "street", "path", "bridge", "lane"},
        {"wall", "floor", "door", "window", "roof"},
    };
    return fillers;
}

std::vector<std::string> all_fillers() {
    std::vector<std::string> words;
    for (const auto& cluster : filler_clusters()) {
        words.insert(words.end(), cluster.begin(), cluster.end());
    }
    return words;
}

} // namespace

std::vector<std::string> concept_synonyms(const std::string& concept_word) {
    const auto it = synonym_table().find(concept_word);
    if (it != synonym_table().end()) {
        return it->second;
    }
    // unknown concept: fabricate a small synthetic cluster around it
    return {concept_word, concept_word + "a", concept_word + "b",
            concept_word + "c"};
}

namespace {

void write_embeddings(const SyntheticSpec& spec, const std::string& path,
                      std::size_t* cluster_count) {
    std::vector<std::vector<std::string>> clusters;
    for (const std::string& c : spec.concepts) {
        clusters.push_back(concept_synonyms(c));
    }
    for (const auto& filler : filler_clusters()) {
        clusters.push_back(filler);
    }
    *cluster_count = clusters.size();

    const std::size_t dim = std::max<std::size_t>(8, clusters.size());
    Rng rng(spec.vocab_seed);
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (out == nullptr) {
        throw ParseError("cannot open for writing: " + path);
    }
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        for (const std::string& word : clusters[c]) {
            std::fprintf(out, "%s", word.c_str());
            for (std::size_t d = 0; d < dim; ++d) {
                const double anchor = d == c ? 40.0 : 0.0;
                std::fprintf(out, " %.6f", anchor + rng.uniform(-1.0, 1.0));
            }
            std::fprintf(out, "\n");
        }
    }
    std::fclose(out);
}

void write_lexicon(const std::string& path) {
    std::ofstream out(path);
    out << "love 3\nawesome 3\ngreat 3\nlike 2\nnice 2\nenjoy 2\n"
        << "hate -3\nawful -3\nbad -2\nboring -2\n";
}

void write_stopwords(const std::string& path) {
    std::ofstream out(path);
    for (const char* word :
         {"the", "a", "an", "i", "my", "is", "are", "of", "in", "on", "at",
          "this", "that", "with", "and", "to", "near", "there"}) {
        out << word << "\n";
    }
}

void write_posts(const std::string& concept_word, const std::string& path,
                 Rng& rng) {
    const std::vector<std::string> synonyms = concept_synonyms(concept_word);
    const std::vector<std::string> fillers = all_fillers();
    std::ofstream out(path);
    const int post_count = 24;
    for (int i = 0; i < post_count; ++i) {
        const std::string& w = synonyms[rng.next_index(synonyms.size())];
        const std::string& w2 = synonyms[rng.next_index(synonyms.size())];
        const std::string& filler = fillers[rng.next_index(fillers.size())];
        switch (i % 5) {
        case 0:
            out << "i love the " << w << "\n";
            break;
        case 1:
            out << "my " << w << " is great\n";
            break;
        case 2:
            out << "the " << w << " and the " << w2 << " are nice\n";
            break;
        case 3:
            out << "i hate the " << filler << "\n"; // filtered out
            break;
        default:
            out << "the " << filler << " is there\n"; // neutral, filtered out
            break;
        }
    }
}

// planted segment covering the frame, if any (first match wins)
const PlantedSegment* planted_at(const SyntheticSpec& spec, int frame) {
    for (const PlantedSegment& seg : spec.planted) {
        if (frame >= seg.start && frame <= seg.end) {
            return &seg;
        }
    }
    return nullptr;
}

BoundingBox random_box(const SyntheticSpec& spec, Rng& rng) {
    BoundingBox box;
    box.width = static_cast<int>(rng.uniform_int(30, 60));
    box.height = static_cast<int>(rng.uniform_int(30, 60));
    box.x = static_cast<int>(rng.uniform_int(0, spec.width - box.width - 1));
    box.y = static_cast<int>(rng.uniform_int(0, spec.height - box.height - 1));
    return box;
}

VideoAnnotations make_annotations(const SyntheticSpec& spec, Rng& rng) {
    const std::vector<std::string> fillers = all_fillers();
    VideoAnnotations video;
    video.fps = spec.fps;
    video.frames.reserve(static_cast<std::size_t>(spec.frames));
    for (int f = 0; f < spec.frames; ++f) {
        FrameAnnotation frame;
        frame.frame_index = f;
        if (const PlantedSegment* seg = planted_at(spec, f)) {
            if (rng.next_double() < seg->density) {
                const auto synonyms = concept_synonyms(seg->concept_word);
                Region region;
                region.caption = "a " + synonyms[rng.next_index(synonyms.size())] +
                                 " near the " +
                                 synonyms[rng.next_index(synonyms.size())];
                region.confidence = rng.uniform(0.7, 1.0);
                region.attention = rng.uniform(0.6, 0.9);
                region.bbox = random_box(spec, rng);
                frame.regions.push_back(std::move(region));
            }
        }
        if (rng.next_double() < spec.noise_region_rate) {
            Region region;
            region.caption = "the " + fillers[rng.next_index(fillers.size())] +
                             " and the " + fillers[rng.next_index(fillers.size())];
            region.confidence = rng.uniform(0.2, 0.9);
            region.attention = rng.uniform(0.1, 0.5);
            region.bbox = random_box(spec, rng);
            frame.regions.push_back(std::move(region));
        }
        video.frames.push_back(std::move(frame));
    }
    return video;
}

TransitionFeatures make_features(const SyntheticSpec& spec, Rng& rng) {
    TransitionFeatures features;
    const int frames = spec.frames;
    features.half_diag =
        0.5 * std::hypot(static_cast<double>(spec.width),
                         static_cast<double>(spec.height));
    features.foe_dist.reserve(static_cast<std::size_t>(frames));
    features.histograms.reserve(static_cast<std::size_t>(frames));
    const int bins = 16;
    for (int f = 0; f < frames; ++f) {
        features.foe_dist.push_back(
            std::abs(0.1 + spec.motion_noise * rng.gaussian()));
        // two smoothly drifting channels so nearby frames look alike
        std::vector<std::vector<double>> hist(2, std::vector<double>(bins, 0.0));
        for (int ch = 0; ch < 2; ++ch) {
            const double mu =
                8.0 + 4.0 * std::sin(2.0 * 3.14159265358979323846 *
                                     (f + 60.0 * ch) / 600.0);
            for (int b = 0; b < bins; ++b) {
                const double d = b - mu;
                hist[static_cast<std::size_t>(ch)][static_cast<std::size_t>(b)] =
                    100.0 * std::exp(-d * d / 8.0);
            }
        }
        features.histograms.push_back(std::move(hist));
        if (f + 1 < frames) {
            features.flow_mag.push_back(
                std::max(0.05, 1.0 + spec.motion_noise * rng.gaussian()));
            if (rng.next_double() < spec.homography_failure_prob) {
                features.center_disp.push_back(std::nullopt);
            } else {
                features.center_disp.push_back(
                    std::abs(2.0 + rng.gaussian()));
            }
        }
    }
    return features;
}

} // namespace

SyntheticCorpus gen_synthetic(const SyntheticSpec& spec,
                              const std::string& out_dir) {
    for (const PlantedSegment& seg : spec.planted) {
        if (seg.start < 0 || seg.end >= spec.frames || seg.start > seg.end) {
            throw Error("planted segment [" + std::to_string(seg.start) + ", " +
                        std::to_string(seg.end) + "] outside 0.." +
                        std::to_string(spec.frames - 1));
        }
    }
    std::filesystem::create_directories(out_dir);
    const auto path = [&](const std::string& name) {
        return (std::filesystem::path(out_dir) / name).string();
    };

    SyntheticCorpus corpus;
    corpus.embeddings = path("embeddings.txt");
    write_embeddings(spec, corpus.embeddings, &corpus.suggested_topics);
    corpus.lexicon = path("lexicon.txt");
    write_lexicon(corpus.lexicon);
    corpus.stopwords = path("stopwords.txt");
    write_stopwords(corpus.stopwords);

    Rng rng(spec.seed);
    for (const std::string& concept_word : spec.concepts) {
        const std::string posts_path = path("posts_" + concept_word + ".txt");
        write_posts(concept_word, posts_path, rng);
        corpus.posts[concept_word] = posts_path;
    }

    const VideoAnnotations video = make_annotations(spec, rng);
    corpus.annotations = path("annotations.jsonl");
    save_annotations(video, corpus.annotations);

    const TransitionFeatures features = make_features(spec, rng);
    corpus.features = path("features.jsonl");
    save_features(features, corpus.features);

    for (const std::string& concept_word : spec.concepts) {
        GroundTruth truth;
        for (const PlantedSegment& seg : spec.planted) {
            if (seg.concept_word != concept_word) {
                continue;
            }
            for (int f = seg.start; f <= seg.end; ++f) {
                truth.relevant.insert(f);
            }
        }
        const std::string truth_path = path("truth_" + concept_word + ".txt");
        save_truth(truth, truth_path);
        corpus.truth[concept_word] = truth_path;
    }

    nlohmann::json manifest;
    manifest["frames"] = spec.frames;
    manifest["fps"] = spec.fps;
    manifest["width"] = spec.width;
    manifest["height"] = spec.height;
    manifest["concepts"] = spec.concepts;
    manifest["seed"] = spec.seed;
    manifest["vocab_seed"] = spec.vocab_seed;
    manifest["suggested_topics"] = corpus.suggested_topics;
    manifest["noise_region_rate"] = spec.noise_region_rate;
    manifest["motion_noise"] = spec.motion_noise;
    manifest["homography_failure_prob"] = spec.homography_failure_prob;
    nlohmann::json planted = nlohmann::json::array();
    for (const PlantedSegment& seg : spec.planted) {
        planted.push_back({{"start", seg.start},
                           {"end", seg.end},
                           {"concept", seg.concept_word},
                           {"density", seg.density}});
    }
    manifest["planted"] = std::move(planted);
    corpus.manifest = path("manifest.json");
    std::ofstream out(corpus.manifest);
    out << manifest.dump(2) << "\n";
    return corpus;
}

} // namespace hypercut

/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_SYNTHETIC_HPP
#define HYPERCUT_SYNTHETIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypercut {

struct PlantedSegment {
    int start = 0;
    int end = 0;           // inclusive
    std::string concept_word;
    double density = 1.0;  // chance a frame in range carries a planted region
};

// Desk-scale corpus description. Every output is a pure function of the spec.
struct SyntheticSpec {
    int frames = 3000;
    double fps = 30.0;
    int width = 640;
    int height = 480;
    std::vector<std::string> concepts; // planted vocabulary, one user each
    std::vector<PlantedSegment> planted;
    double noise_region_rate = 0.3;
    double motion_noise = 0.1;
    double homography_failure_prob = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t vocab_seed = 1; // embeddings depend only on this
};

// Paths of everything gen_synthetic wrote.
struct SyntheticCorpus {
    std::string annotations;
    std::string features;
    std::string embeddings;
    std::string lexicon;
    std::string stopwords;
    std::string manifest;
    std::map<std::string, std::string> posts; // concept -> posts file
    std::map<std::string, std::string> truth; // concept -> truth file
    std::size_t suggested_topics = 0;         // clusters in the embedding set
};

// Writes a self-contained corpus (embeddings, lexicon, stopwords, frame
// annotations, transition features, per-concept posts and ground truth, and
// a manifest) into out_dir. Byte-identical for identical specs.
SyntheticCorpus gen_synthetic(const SyntheticSpec& spec,
                              const std::string& out_dir);

// Synonym group used for a planted concept (the concept word first).
std::vector<std::string> concept_synonyms(const std::string& concept_word);

} // namespace hypercut

#endif // HYPERCUT_SYNTHETIC_HPP

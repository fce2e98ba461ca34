/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_USER_PROFILE_HPP
#define HYPERCUT_USER_PROFILE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypercut/embedding.hpp"
#include "hypercut/topic_space.hpp"

namespace hypercut {

// Raw social-network posts for one user.
struct PostCorpus {
    std::vector<std::string> posts;
    std::string source_id;
};

// token -> signed valence; a transparent stand-in for a full sentiment engine.
struct SentimentLexicon {
    std::map<std::string, int> scores;

    int valence(const std::string& token) const {
        const auto it = scores.find(token);
        return it == scores.end() ? 0 : it->second;
    }
};

// Ordered concept tokens; duplicates are retained because counts matter.
struct ConceptDocument {
    std::vector<std::string> concepts;
};

// K-dimensional non-negative topic-mass vector shared by users and frames.
struct BagOfTopics {
    std::vector<double> weights;

    std::size_t topic_count() const { return weights.size(); }
};

// Token filters applied when turning text into concepts. An empty noun list
// means "no noun restriction".
struct ConceptFilter {
    std::set<std::string> stopwords;
    std::optional<std::set<std::string>> nouns;
};

// Keeps sentences whose summed token valence is strictly positive,
// in their original order.
std::vector<std::string> filter_positive(const PostCorpus& posts,
                                         const SentimentLexicon& lexicon);

// Lowercases, strips URLs/@mentions/'#'/punctuation/stopwords, drops
// out-of-vocabulary tokens, and applies the optional noun whitelist.
ConceptDocument extract_concepts(const std::vector<std::string>& sentences,
                                 const EmbeddingTable& table,
                                 const ConceptFilter& filter);

// x_k = number of concepts assigned to topic k. Out-of-vocabulary concepts
// are skipped; their count is logged to stderr.
BagOfTopics build_user_bot(const ConceptDocument& doc, const TopicSpace& space,
                           const EmbeddingTable& table);

} // namespace hypercut

#endif // HYPERCUT_USER_PROFILE_HPP

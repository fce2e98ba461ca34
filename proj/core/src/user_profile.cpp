/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/user_profile.hpp"

#include <iostream>

#include "hypercut/text.hpp"

namespace hypercut {

std::vector<std::string> filter_positive(const PostCorpus& posts,
                                         const SentimentLexicon& lexicon) {
    std::vector<std::string> kept;
    for (const std::string& post : posts.posts) {
        for (std::string& sentence : split_sentences(post)) {
            long long valence = 0;
            for (const std::string& token : tokenize(sentence)) {
                valence += lexicon.valence(token);
            }
            if (valence > 0) {
                kept.push_back(std::move(sentence));
            }
        }
    }
    return kept;
}

ConceptDocument extract_concepts(const std::vector<std::string>& sentences,
                                 const EmbeddingTable& table,
                                 const ConceptFilter& filter) {
    ConceptDocument doc;
    for (const std::string& sentence : sentences) {
        for (std::string& token : tokenize(sentence)) {
            if (filter.stopwords.count(token) != 0) {
                continue;
            }
            if (filter.nouns && filter.nouns->count(token) == 0) {
                continue;
            }
            if (!table.find(token)) {
                continue;
            }
            doc.concepts.push_back(std::move(token));
        }
    }
    return doc;
}

BagOfTopics build_user_bot(const ConceptDocument& doc, const TopicSpace& space,
                           const EmbeddingTable& table) {
    BagOfTopics bot;
    bot.weights.assign(space.topic_count, 0.0);
    std::size_t oov = 0;
    for (const std::string& concept_token : doc.concepts) {
        const auto vec = embed_concept(concept_token, table);
        if (!vec) {
            ++oov;
            continue;
        }
        bot.weights[assign_topic(*vec, space)] += 1.0;
    }
    if (oov > 0) {
        std::cerr << "warning: skipped " << oov
                  << " out-of-vocabulary concept(s) while building user profile\n";
    }
    return bot;
}

} // namespace hypercut

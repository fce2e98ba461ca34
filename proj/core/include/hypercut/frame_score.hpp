/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_FRAME_SCORE_HPP
#define HYPERCUT_FRAME_SCORE_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "hypercut/annotations.hpp"
#include "hypercut/embedding.hpp"
#include "hypercut/topic_space.hpp"
#include "hypercut/user_profile.hpp"

namespace hypercut {

// How the inverse-document part of the concept weight is read.
//   Literal:   T(c, D_f) = (1 + ln tf) * ln(total_tokens / tf)
//              with tf the occurrence count of c inside D_f. The ratio uses
//              the corpus-wide token count over the in-document term count.
//   DocumentFrequency: the conventional reading,
//              T(c, D_f) = (1 + ln tf) * ln(F / df)
//              with df the number of frame documents containing c.
enum class TfIdfMode { Literal, DocumentFrequency };

// Term statistics over the per-frame concept documents D_f.
class CorpusStats {
public:
    CorpusStats(std::vector<ConceptDocument> documents, TfIdfMode mode);

    std::size_t document_count() const { return term_counts_.size(); }
    long long total_tokens() const { return total_tokens_; }
    TfIdfMode mode() const { return mode_; }

    long long term_count(const std::string& concept_token,
                         std::size_t doc) const;
    long long document_frequency(const std::string& concept_token) const;

private:
    std::vector<std::unordered_map<std::string, long long>> term_counts_;
    std::unordered_map<std::string, long long> doc_frequency_;
    long long total_tokens_ = 0;
    TfIdfMode mode_;
};

// Mean saliency over the region's pixels (attention weight). A precomputed
// region attention wins over the grid.
double attention_weight(const Region& region, const SaliencyGrid& saliency);

// Log-normalized concept weight T(c, D_f); 0 when c does not occur in D_f.
double tf_idf(const std::string& concept_token, std::size_t doc,
              const CorpusStats& stats);

// Sum of T(c, D_f) over the region-caption concepts mapping to topic k.
double uniqueness_weight(const std::vector<std::string>& region_concepts,
                         std::size_t doc, std::size_t topic,
                         const CorpusStats& stats, const TopicSpace& space,
                         const EmbeddingTable& table);

// Everything score_video needs besides the user profile.
struct ScoringContext {
    const TopicSpace& space;
    const EmbeddingTable& table;
    ConceptFilter filter;
    TfIdfMode tfidf_mode = TfIdfMode::Literal;
};

// Frame topic vector: x_k = sum_r attention * confidence * uniqueness(r, k).
BagOfTopics frame_bot(const FrameAnnotation& frame, const CorpusStats& stats,
                      const ScoringContext& ctx);

// Cosine similarity in [0,1]; 0 when either vector has zero norm.
double interestingness(const BagOfTopics& user, const BagOfTopics& frame);

struct InterestProfile {
    std::vector<double> scores; // one per frame, in [0,1]

    std::size_t frame_count() const { return scores.size(); }
};

// Per-frame interestingness profile for one user over the whole video.
InterestProfile score_video(const BagOfTopics& user,
                            const VideoAnnotations& video,
                            const ScoringContext& ctx);

// The per-frame concept documents D_f (each frame's captions tokenized with
// the shared filter), exposed for oracle checks and the stats prepass.
std::vector<ConceptDocument> frame_documents(const VideoAnnotations& video,
                                             const EmbeddingTable& table,
                                             const ConceptFilter& filter);

} // namespace hypercut

#endif // HYPERCUT_FRAME_SCORE_HPP

/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/frame_score.hpp"

#include <algorithm>
#include <cmath>

#include "hypercut/errors.hpp"

namespace hypercut {

CorpusStats::CorpusStats(std::vector<ConceptDocument> documents, TfIdfMode mode)
    : mode_(mode) {
    term_counts_.resize(documents.size());
    for (std::size_t f = 0; f < documents.size(); ++f) {
        for (const std::string& c : documents[f].concepts) {
            ++term_counts_[f][c];
            ++total_tokens_;
        }
        for (const auto& [term, count] : term_counts_[f]) {
            (void)count;
            ++doc_frequency_[term];
        }
    }
}

long long CorpusStats::term_count(const std::string& concept_token,
                                  std::size_t doc) const {
    const auto& counts = term_counts_.at(doc);
    const auto it = counts.find(concept_token);
    return it == counts.end() ? 0 : it->second;
}

long long CorpusStats::document_frequency(
    const std::string& concept_token) const {
    const auto it = doc_frequency_.find(concept_token);
    return it == doc_frequency_.end() ? 0 : it->second;
}

double attention_weight(const Region& region, const SaliencyGrid& saliency) {
    if (region.attention) {
        return *region.attention;
    }
    const BoundingBox& box = region.bbox;
    if (box.width <= 0 || box.height <= 0) {
        throw RegionOutOfBounds("region has an empty bounding box");
    }
    // grid coordinates covered by the box
    const auto to_grid_x = [&](int px) {
        return static_cast<int>(std::floor(px * saliency.scale));
    };
    const auto to_grid_y = [&](int py) {
        return static_cast<int>(std::floor(py * saliency.scale));
    };
    if (to_grid_x(box.x) >= saliency.width || to_grid_y(box.y) >= saliency.height ||
        to_grid_x(box.x + box.width - 1) < 0 ||
        to_grid_y(box.y + box.height - 1) < 0) {
        throw RegionOutOfBounds("region bbox lies outside the saliency grid");
    }
    double sum = 0.0;
    for (int py = box.y; py < box.y + box.height; ++py) {
        const int gy = std::clamp(to_grid_y(py), 0, saliency.height - 1);
        for (int px = box.x; px < box.x + box.width; ++px) {
            const int gx = std::clamp(to_grid_x(px), 0, saliency.width - 1);
            sum += saliency.at(gx, gy);
        }
    }
    return sum / static_cast<double>(box.pixel_count());
}

double tf_idf(const std::string& concept_token, std::size_t doc,
              const CorpusStats& stats) {
    const long long tf = stats.term_count(concept_token, doc);
    if (tf <= 0) {
        return 0.0;
    }
    const double tf_part = 1.0 + std::log(static_cast<double>(tf));
    if (stats.mode() == TfIdfMode::DocumentFrequency) {
        const long long df = stats.document_frequency(concept_token);
        return tf_part * std::log(static_cast<double>(stats.document_count()) /
                                  static_cast<double>(df));
    }
    return tf_part * std::log(static_cast<double>(stats.total_tokens()) /
                              static_cast<double>(tf));
}

double uniqueness_weight(const std::vector<std::string>& region_concepts,
                         std::size_t doc, std::size_t topic,
                         const CorpusStats& stats, const TopicSpace& space,
                         const EmbeddingTable& table) {
    double sum = 0.0;
    for (const std::string& c : region_concepts) {
        const auto vec = embed_concept(c, table);
        if (!vec) {
            continue;
        }
        if (assign_topic(*vec, space) == topic) {
            sum += tf_idf(c, doc, stats);
        }
    }
    return sum;
}

namespace {

// Full uniqueness vector of one region; avoids a K-sized scan per concept.
void accumulate_region(const std::vector<std::string>& region_concepts,
                       std::size_t doc, double scale, const CorpusStats& stats,
                       const ScoringContext& ctx, std::vector<double>& out) {
    for (const std::string& c : region_concepts) {
        const auto vec = embed_concept(c, ctx.table);
        if (!vec) {
            continue;
        }
        out[assign_topic(*vec, ctx.space)] += scale * tf_idf(c, doc, stats);
    }
}

std::vector<std::string> caption_concepts(const std::string& caption,
                                          const EmbeddingTable& table,
                                          const ConceptFilter& filter) {
    return extract_concepts({caption}, table, filter).concepts;
}

} // namespace

BagOfTopics frame_bot(const FrameAnnotation& frame, const CorpusStats& stats,
                      const ScoringContext& ctx) {
    BagOfTopics bot;
    bot.weights.assign(ctx.space.topic_count, 0.0);
    for (const Region& region : frame.regions) {
        double attn = 0.0;
        if (region.attention) {
            attn = *region.attention;
        } else if (frame.saliency) {
            attn = attention_weight(region, *frame.saliency);
        } else {
            throw MissingAttention(
                "frame " + std::to_string(frame.frame_index) +
                    ": region has neither precomputed attention nor a saliency grid",
                frame.frame_index);
        }
        const auto concepts =
            caption_concepts(region.caption, ctx.table, ctx.filter);
        accumulate_region(concepts, static_cast<std::size_t>(frame.frame_index),
                          attn * region.confidence, stats, ctx, bot.weights);
    }
    return bot;
}

double interestingness(const BagOfTopics& user, const BagOfTopics& frame) {
    if (user.topic_count() != frame.topic_count()) {
        throw TopicCountMismatch(
            "user has " + std::to_string(user.topic_count()) +
            " topics, frame has " + std::to_string(frame.topic_count()));
    }
    double dot = 0.0;
    double nu = 0.0;
    double nf = 0.0;
    for (std::size_t k = 0; k < user.topic_count(); ++k) {
        dot += user.weights[k] * frame.weights[k];
        nu += user.weights[k] * user.weights[k];
        nf += frame.weights[k] * frame.weights[k];
    }
    if (nu == 0.0 || nf == 0.0) {
        return 0.0;
    }
    return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nf)), 0.0, 1.0);
}

std::vector<ConceptDocument> frame_documents(const VideoAnnotations& video,
                                             const EmbeddingTable& table,
                                             const ConceptFilter& filter) {
    std::vector<ConceptDocument> docs(video.frame_count());
    for (std::size_t f = 0; f < video.frame_count(); ++f) {
        for (const Region& region : video.frames[f].regions) {
            auto concepts = caption_concepts(region.caption, table, filter);
            docs[f].concepts.insert(docs[f].concepts.end(),
                                    std::make_move_iterator(concepts.begin()),
                                    std::make_move_iterator(concepts.end()));
        }
    }
    return docs;
}

InterestProfile score_video(const BagOfTopics& user,
                            const VideoAnnotations& video,
                            const ScoringContext& ctx) {
    const CorpusStats stats(frame_documents(video, ctx.table, ctx.filter),
                            ctx.tfidf_mode);
    InterestProfile profile;
    profile.scores.reserve(video.frame_count());
    for (std::size_t f = 0; f < video.frame_count(); ++f) {
        try {
            profile.scores.push_back(
                interestingness(user, frame_bot(video.frames[f], stats, ctx)));
        } catch (const MissingAttention&) {
            throw;
        } catch (const Error& e) {
            throw Error("frame " + std::to_string(f) + ": " + e.what());
        }
    }
    return profile;
}

} // namespace hypercut

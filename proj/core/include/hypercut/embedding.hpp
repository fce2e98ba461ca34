/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_EMBEDDING_HPP
#define HYPERCUT_EMBEDDING_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypercut {

// Word-embedding table. Entries keep file order so everything built on top
// of them is reproducible.
class EmbeddingTable {
public:
    EmbeddingTable() = default;

    // Appends an entry; returns false (and keeps the first occurrence) when
    // the word is already present.
    bool add(std::string word, std::vector<double> vector);

    std::size_t size() const { return words_.size(); }
    std::size_t dimension() const { return dimension_; }

    const std::string& word(std::size_t i) const { return words_[i]; }
    std::span<const double> vector(std::size_t i) const {
        return {vectors_.data() + i * dimension_, dimension_};
    }

    // Lookup of an already-lowercased token.
    std::optional<std::span<const double>> find(std::string_view word) const;

private:
    std::vector<std::string> words_;
    std::vector<double> vectors_; // row-major size() x dimension()
    std::size_t dimension_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

// Reads a plain-text table: one `word v1 v2 ... vd` entry per line.
// Duplicate words keep the first occurrence and log a warning to stderr.
EmbeddingTable load_embeddings(const std::string& path);

// phi: lowercases the concept and returns its vector, or nothing when the
// concept is out of vocabulary.
std::optional<std::span<const double>> embed_concept(std::string_view concept_token,
                                                     const EmbeddingTable& table);

} // namespace hypercut

#endif // HYPERCUT_EMBEDDING_HPP

/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/embedding.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypercut/errors.hpp"
#include "hypercut/text.hpp"

namespace hypercut {

bool EmbeddingTable::add(std::string word, std::vector<double> vector) {
    if (index_.count(word) != 0) {
        return false;
    }
    if (words_.empty()) {
        dimension_ = vector.size();
    }
    index_.emplace(word, words_.size());
    words_.push_back(std::move(word));
    vectors_.insert(vectors_.end(), vector.begin(), vector.end());
    return true;
}

std::optional<std::span<const double>> EmbeddingTable::find(
    std::string_view word) const {
    const auto it = index_.find(std::string(word));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return vector(it->second);
}

EmbeddingTable load_embeddings(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open embedding file: " + path);
    }

    EmbeddingTable table;
    std::string line;
    long line_no = 0;
    long duplicates = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) {
            continue; // blank line
        }
        std::vector<double> values;
        std::string field;
        while (ss >> field) {
            double v = 0.0;
            const char* begin = field.data();
            const char* end = begin + field.size();
            const auto [ptr, ec] = std::from_chars(begin, end, v);
            if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
                throw ParseError(path + ": line " + std::to_string(line_no) +
                                     ": bad float '" + field + "'",
                                 line_no);
            }
            values.push_back(v);
        }
        if (values.empty()) {
            throw ParseError(path + ": line " + std::to_string(line_no) +
                                 ": no values for word '" + word + "'",
                             line_no);
        }
        if (table.size() > 0 && values.size() != table.dimension()) {
            throw DimensionMismatch(
                path + ": line " + std::to_string(line_no) + ": expected " +
                    std::to_string(table.dimension()) + " values, got " +
                    std::to_string(values.size()),
                line_no);
        }
        if (!table.add(std::move(word), std::move(values))) {
            ++duplicates;
        }
    }
    if (duplicates > 0) {
        std::cerr << "warning: " << path << ": " << duplicates
                  << " duplicate word(s), first occurrence kept\n";
    }
    if (table.size() == 0) {
        throw EmptyVocabulary(path + ": no embeddings");
    }
    return table;
}

std::optional<std::span<const double>> embed_concept(
    std::string_view concept_token, const EmbeddingTable& table) {
    return table.find(to_lower(concept_token));
}

} // namespace hypercut

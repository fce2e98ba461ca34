/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/text.hpp"

#include <cctype>

namespace hypercut {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_alnum(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) {
        ++b;
    }
    while (e > b && is_space(s[e - 1])) {
        --e;
    }
    return s.substr(b, e - b);
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

} // namespace

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        out.push_back(
            static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    std::string current;
    for (char c : text) {
        if (c == '.' || c == '!' || c == '?' || c == '\n') {
            const std::string_view piece = trim(current);
            if (!piece.empty()) {
                sentences.emplace_back(piece);
            }
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    const std::string_view piece = trim(current);
    if (!piece.empty()) {
        sentences.emplace_back(piece);
    }
    return sentences;
}

std::optional<std::string> normalize_token(std::string_view raw) {
    std::string low = to_lower(trim(raw));
    if (low.empty()) {
        return std::nullopt;
    }
    if (starts_with(low, "http://") || starts_with(low, "https://") ||
        starts_with(low, "www.")) {
        return std::nullopt;
    }
    if (low.front() == '@') {
        return std::nullopt;
    }
    if (low.front() == '#') {
        low.erase(low.begin());
    }
    std::string out;
    out.reserve(low.size());
    for (char c : low) {
        if (is_alnum(c)) {
            out.push_back(c);
        }
    }
    if (out.empty()) {
        return std::nullopt;
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < sentence.size()) {
        while (i < sentence.size() && is_space(sentence[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < sentence.size() && !is_space(sentence[j])) {
            ++j;
        }
        if (j > i) {
            if (auto tok = normalize_token(sentence.substr(i, j - i))) {
                tokens.push_back(std::move(*tok));
            }
        }
        i = j;
    }
    return tokens;
}

} // namespace hypercut

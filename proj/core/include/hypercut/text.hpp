/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_TEXT_HPP
#define HYPERCUT_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypercut {

std::string to_lower(std::string_view s);

// Splits raw text into sentences on '.', '!', '?' and newlines.
// Pieces are trimmed; empty pieces are dropped.
std::vector<std::string> split_sentences(std::string_view text);

// Lowercases and cleans a whitespace-delimited raw token:
//  - URLs (http://, https://, www.) and @mentions are dropped,
//  - a leading '#' is stripped so the tag word survives,
//  - remaining non-alphanumeric characters are removed.
// Returns nothing when the token is empty after cleaning.
std::optional<std::string> normalize_token(std::string_view raw);

// Whitespace word split followed by normalize_token on each word.
std::vector<std::string> tokenize(std::string_view sentence);

} // namespace hypercut

#endif // HYPERCUT_TEXT_HPP

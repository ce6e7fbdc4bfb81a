#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropsem/plm.hpp"

namespace tropsem {

/// Whitespace tokenization.
std::vector<std::string> tokenize(const std::string& text);

/// Model whose texts are the distinct contiguous n-grams (n <= max_len) of the
/// token stream, ordered by length and then lexicographically, optionally
/// preceded by the empty text. Pr(a_j | a_i) = count(a_j) / count(a_i) for
/// a_i <= a_j, where counts are overlapping occurrences and the empty text
/// counts once per token.
Plm ingest_corpus(const std::vector<std::string>& tokens, OrderMode mode, std::size_t max_len, bool include_empty);

}  // namespace tropsem

#include "tropsem/corpus.hpp"

#include <map>
#include <sstream>

#include "tropsem/error.hpp"

namespace tropsem {

std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Plm ingest_corpus(const std::vector<std::string>& tokens, OrderMode mode, std::size_t max_len, bool include_empty) {
  if (tokens.empty()) throw InvalidInput("empty corpus");
  if (max_len < 1) throw InvalidInput("max length must be at least 1");
  if (max_len > tokens.size()) throw InvalidInput("max length exceeds the corpus length");
  if (mode == OrderMode::Explicit) throw InvalidInput("corpus ingestion needs a subtext order mode");

  // Keyed by (length, tokens) so iteration gives the output order directly.
  std::map<std::pair<std::size_t, Text>, std::size_t> counts;
  for (std::size_t start = 0; start < tokens.size(); ++start)
    for (std::size_t len = 1; len <= max_len && start + len <= tokens.size(); ++len) {
      Text gram(tokens.begin() + static_cast<std::ptrdiff_t>(start),
                tokens.begin() + static_cast<std::ptrdiff_t>(start + len));
      ++counts[{len, std::move(gram)}];
    }

  Plm m;
  m.mode = mode;
  std::vector<std::size_t> count;
  if (include_empty) {
    m.texts.emplace_back();
    count.push_back(tokens.size());
  }
  for (const auto& [key, c] : counts) {
    m.texts.push_back(key.second);
    count.push_back(c);
  }
  const PartialOrder ord = m.order();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && ord.leq(i, j)) m.pr[{i, j}] = Rational(count[j], count[i]);
  return m;
}

}  // namespace tropsem

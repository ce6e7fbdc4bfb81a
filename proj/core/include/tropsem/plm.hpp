#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropsem/mult.hpp"
#include "tropsem/partial_order.hpp"

namespace tropsem {

using Text = std::vector<std::string>;

enum class OrderMode {
  OneSided,  ///< a_i <= a_j iff a_i is a prefix of a_j
  TwoSided,  ///< a_i <= a_j iff a_i is a contiguous substring of a_j
  Explicit,  ///< reflexive-transitive closure of the pairs listed in pr
};

std::string to_string(OrderMode m);
OrderMode parse_order_mode(const std::string& s);

/// Probabilistic language model: texts, a subtext order and exact extension
/// probabilities Pr(a_j | a_i) for a_i <= a_j.
struct Plm {
  std::vector<Text> texts;
  OrderMode mode = OrderMode::TwoSided;
  /// Off-diagonal entries Pr(a_to | a_from). Diagonal entries are implied to
  /// be 1; if present they must equal 1.
  std::map<std::pair<std::size_t, std::size_t>, Rational> pr;
  /// Permit values above 1 (models with values in [0, inf)).
  bool extended_values = false;

  std::size_t size() const { return texts.size(); }
  bool has_empty_text() const;
  std::optional<std::size_t> empty_text_index() const;

  /// Pr(a_j | a_i) if listed (1 on the diagonal), nullopt otherwise.
  std::optional<Rational> probability(std::size_t i, std::size_t j) const;

  /// The subtext order induced by mode.
  PartialOrder order() const;

  std::vector<std::string> labels() const;
};

/// Space-joined label; the empty text prints as "<empty>".
std::string text_label(const Text& t);

bool is_prefix(const Text& a, const Text& b);
bool is_substring(const Text& a, const Text& b);

struct TripleViolation {
  std::size_t i, j, k;   ///< a_i <= a_j <= a_k
  Rational direct;       ///< Pr(a_k | a_i)
  Rational through;      ///< Pr(a_j | a_i) * Pr(a_k | a_j)
};

struct ValidationReport {
  std::vector<TripleViolation> triples;
  std::vector<std::size_t> reflexivity;                                ///< Pr(a_i|a_i) != 1
  std::vector<std::string> order_issues;                              ///< relation and probability mismatches
  std::vector<std::pair<std::size_t, std::size_t>> missing;           ///< comparable pair without a value
  std::vector<std::pair<std::size_t, std::size_t>> not_comparable;    ///< value on an incomparable pair
  std::vector<std::pair<std::size_t, std::size_t>> out_of_range;      ///< value 0, or above 1 when not extended
  /// Not failures: e.g. a component with no potential, which happens when a
  /// crown (a, b <= c, d) carries inconsistent values without any chain triple.
  std::vector<std::string> warnings;

  bool ok() const {
    return triples.empty() && reflexivity.empty() && order_issues.empty() && missing.empty() &&
           not_comparable.empty() && out_of_range.empty();
  }
  std::vector<std::string> describe(const Plm& m) const;
};

/// Never throws on a structurally readable model.
ValidationReport validate_plm(const Plm& m);

/// Multiplicative potential on one connected component of the Hasse diagram:
/// Pr(a_j | a_i) = value[j] / value[i] for comparable a_i <= a_j.
struct Potential {
  std::size_t component = 0;
  std::size_t reference = 0;
  std::vector<std::size_t> members;
  std::map<std::size_t, Rational> value;
};

/// One potential per component, reference = least index unless overridden in
/// `references` (one entry per component, by component order). Throws
/// InvalidInput naming the offending cycle when a potential does not exist.
std::vector<Potential> potentials(const Plm& m, const std::vector<std::size_t>& references = {});

}  // namespace tropsem

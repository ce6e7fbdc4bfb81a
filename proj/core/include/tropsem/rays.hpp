#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropsem/directed_metric.hpp"
#include "tropsem/mult.hpp"
#include "tropsem/partial_order.hpp"
#include "tropsem/plm.hpp"
#include "tropsem/polyhedron.hpp"

namespace tropsem {

inline constexpr std::size_t kLowerSetMaxTexts = 24;

/// Subset of texts as a bit mask (bit i = text i).
struct LowerSet {
  std::uint64_t members = 0;
  bool connected = false;

  bool contains(std::size_t i) const { return (members >> i) & 1U; }
  std::size_t count() const;
  std::vector<std::size_t> elements() const;
  friend bool operator==(const LowerSet& a, const LowerSet& b) { return a.members == b.members; }
};

LowerSet make_set(const std::vector<std::size_t>& elements, const PartialOrder& order);

bool is_lower_set(std::uint64_t members, const PartialOrder& order);
/// Undirected comparability (equivalently Hasse) connectivity of the subset.
bool is_connected_subset(std::uint64_t members, const PartialOrder& order);

/// Per-text weights w with Pr(a_j | a_i) = w_j / w_i on comparable pairs, so
/// y~_i = w_i y_i turns y_i >= Pr(a_j|a_i) y_j into y~_i >= y~_j. Reference
/// weights are 1 (least index per component unless given). Checked on every
/// constraint.
std::vector<Rational> diagonal_scaling(const Plm& m, const std::vector<std::size_t>& references = {});

/// All nonempty connected lower sets, sorted by mask.
std::vector<LowerSet> enumerate_connected_lower_sets(const PartialOrder& order,
                                                     std::size_t max_n = kLowerSetMaxTexts);

struct Ray {
  QVector generator;
  LowerSet carrier;  ///< lower set (Side::Lower) or upper set (Side::Upper)
  Side side = Side::Lower;
  std::optional<std::size_t> principal_of;
  std::size_t certificate_rank = 0;
};

/// y_i = 1 / w_i on C and 0 elsewhere, where w is the diagonal scaling whose
/// reference is `reference` (least element of C by default). The generator is
/// left in that scale; the certificate rank is checked to be n - 1.
Ray ray_from_lower_set(const Plm& m, const LowerSet& c, std::optional<std::size_t> reference = std::nullopt);

/// Opposite model: same texts, reversed order, Pr^op(a_j | a_i) = Pr(a_i | a_j).
Plm opposite_model(const Plm& m);

/// One ray per connected lower set (Lower) or connected upper set (Upper),
/// generators in canonical form (largest coordinate 1), sorted by generator.
std::vector<Ray> enumerate_rays(const Plm& m, Side side);

/// Saturation graph of the generator; checked to contain exactly the
/// comparable pairs inside the carrier.
SaturationGraph ray_saturation_edges(const Ray& r, const Plm& m);

struct TextTerm {
  std::size_t text;
  ExtReal weight;    ///< log Pr(b | a_0)
  Mult exp_weight;   ///< e^{-weight} = 1 / Pr(b | a_0)
};

/// Maximal elements b of a lower-side ray's carrier with weights log Pr(b),
/// such that (+)_b weight (.) Y(b) = -log(generator) + const. Needs the empty
/// text; the reconstruction is checked exactly.
std::vector<TextTerm> ray_as_text_combination(const Ray& r, const Plm& m);

}  // namespace tropsem

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropsem/ext_real.hpp"
#include "tropsem/matrix.hpp"
#include "tropsem/mult.hpp"
#include "tropsem/partial_order.hpp"
#include "tropsem/plm.hpp"

namespace tropsem {

/// Square matrix of directed distances d(a_i, a_j) with zero diagonal, held
/// both as log values and as exact multiplicative values p = e^{-d}.
///
/// For metrics built from a Plm the multiplicative values are the model's
/// probabilities. For metrics given by log values only, each finite entry
/// carries a rational surrogate (by default the dyadic value of exp(-d)).
class DirectedMetric {
 public:
  DirectedMetric() = default;
  DirectedMetric(std::vector<std::string> labels, Matrix<ExtReal> log, Matrix<Mult> prob, bool from_plm);

  /// Log values only; surrogates are exp_neg_surrogate of each finite entry.
  static DirectedMetric from_log(std::vector<std::string> labels, const Matrix<ExtReal>& log);
  /// Exact values only; logs are -ln p.
  static DirectedMetric from_prob(std::vector<std::string> labels, const Matrix<Mult>& prob, bool from_plm);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  const ExtReal& log(std::size_t i, std::size_t j) const { return log_(i, j); }
  const Mult& prob(std::size_t i, std::size_t j) const { return prob_(i, j); }
  const Matrix<ExtReal>& log_matrix() const { return log_; }
  const Matrix<Mult>& prob_matrix() const { return prob_; }

  /// True when the metric came from a Plm (enables the lower-set machinery).
  bool from_plm() const { return from_plm_; }
  /// True when some entry is -inf.
  bool has_neg_inf() const;

  /// d^t, with labels kept.
  DirectedMetric transpose() const;

 private:
  std::vector<std::string> labels_;
  Matrix<ExtReal> log_;
  Matrix<Mult> prob_;
  bool from_plm_ = false;
};

/// d(a_i, a_j) = -log Pr(a_j | a_i) for a_i <= a_j, +inf otherwise. Throws
/// InvalidInput if validate_plm reports problems.
DirectedMetric metric_from_plm(const Plm& m);

/// Inverse of metric_from_plm in Explicit order mode; texts are the labels
/// split on spaces. Requires exact multiplicative values in (0, 1].
Plm plm_from_metric(const DirectedMetric& d);

struct OrderFromMetric {
  PartialOrder relation;  ///< i <= j iff d(i, j) < +inf
  bool antisymmetric = false;
  bool transitive = false;
  bool is_order() const { return antisymmetric && transitive; }
};

OrderFromMetric order_from_metric(const DirectedMetric& d);

/// d o d == d under (min,+), decided exactly on the multiplicative values.
bool check_projector(const DirectedMetric& d);
/// Same test on a bare log matrix, with the log-domain tolerance.
bool check_projector_log(const Matrix<ExtReal>& d);

/// Triangle inequality and zero diagonal, exact on multiplicative values.
struct MetricCheck {
  bool zero_diagonal = true;
  bool triangle = true;
  std::vector<std::string> failures;
  bool ok() const { return zero_diagonal && triangle; }
};
MetricCheck check_metric(const DirectedMetric& d);

/// One-word extension matrix: entries of d kept when a_j extends a_i by a
/// single token (Hasse covers in Explicit mode), +inf elsewhere off the diagonal.
DirectedMetric one_word_matrix(const Plm& m);

/// Least power C^k with C^k = C^{k+1}, computed exactly on the multiplicative
/// values and separately on the log values.
struct KleeneResult {
  DirectedMetric metric;
  std::size_t power = 1;
};
KleeneResult kleene_closure(const DirectedMetric& c);

struct BigMResult {
  DirectedMetric metric;
  bool projector = false;
  std::optional<std::string> warning;
};

/// Replaces every +inf entry by M (multiplicative surrogate: the dyadic value
/// of exp(-M)). The result is a directed metric but no longer a Plm metric.
BigMResult truncate_big_m(const DirectedMetric& d, double big_m);

}  // namespace tropsem

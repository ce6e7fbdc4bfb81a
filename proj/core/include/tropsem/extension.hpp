#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropsem/directed_metric.hpp"
#include "tropsem/ext_real.hpp"
#include "tropsem/matrix.hpp"
#include "tropsem/mult.hpp"
#include "tropsem/plm.hpp"

namespace tropsem {

/// Isometric embedding of a sub-model's points into the big model's P(L).
class Embedding {
 public:
  Embedding(DirectedMetric sub, DirectedMetric big, std::vector<std::size_t> mapping);

  const DirectedMetric& sub() const { return sub_; }
  const DirectedMetric& big() const { return big_; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

  /// phi~(x)_i = min_m x_m + d_big(i, phi(m)).
  ExtVector extend(const ExtVector& x) const;
  MultVector extend_exact(const MultVector& z) const;

 private:
  DirectedMetric sub_;
  DirectedMetric big_;
  std::vector<std::size_t> mapping_;
};

/// Checks injectivity and d_sub(a, b) = d_big(phi a, phi b) exactly, then
/// phi~(Y_sub(a)) = Y_big(phi a). Throws InvalidInput naming the first
/// violating pair.
Embedding embed_model(const DirectedMetric& sub, const DirectedMetric& big, const std::vector<std::size_t>& mapping);
Embedding embed_model(const Plm& sub, const Plm& big, const std::vector<std::size_t>& mapping);

/// R_ik = min_{j in S} d_ij + d_jk, the idempotent non-expansive projection
/// onto the span of the Yoneda columns of the subset S.
struct RetractionOp {
  std::vector<std::size_t> subset;
  Matrix<ExtReal> log;
  Matrix<Mult> prob;

  /// nullopt when the image is the all-+inf vector (no overlap with S).
  std::optional<ExtVector> apply(const ExtVector& x) const;
  std::optional<MultVector> apply_exact(const MultVector& z) const;
  /// R x without the all-+inf check.
  ExtVector apply_matrix(const ExtVector& x) const;
};

/// Builds R and checks R o R = R and R(Y(b)) = Y(b) for b in S, exactly.
RetractionOp retraction_from_subset(const DirectedMetric& big, std::vector<std::size_t> subset);

struct WordTerm {
  std::size_t word;
  ExtReal weight;   ///< d(w, b)
  Mult exp_weight;  ///< Pr(b | w)
};

/// R(Y(b)) = (+)_{w <= b} d(w, b) (.) Y(w) for a set of words at pairwise
/// distance +inf. Throws InvalidInput if the words fail that hypothesis or
/// none of them lies below the text.
std::vector<WordTerm> word_decompose(const DirectedMetric& big, const std::vector<std::size_t>& words,
                                     std::size_t text);
std::vector<WordTerm> word_decompose(const Plm& big, const std::vector<std::size_t>& words, std::size_t text);

struct BoltzmannTerm {
  ExtReal lambda;
  ExtVector x;
  /// Optional exact multiplicative data: e^{-lambda} and e^{-x}.
  std::optional<Mult> exp_lambda;
  std::optional<MultVector> exp_x;
};

struct BoltzmannResult {
  double temperature = 1.0;
  ExtVector readback;   ///< -T log sum_t e^{-(lambda_t + x_t)/T}
  ExtVector min_plus;   ///< (+)_t lambda_t (.) x_t
  std::vector<double> v;  ///< sum_t e^{-(lambda_t + x_t)/T}, may underflow to 0
  /// Exact v at T = 1 when every term carries exact data.
  std::optional<QVector> exact_v;
  double bound = 0.0;   ///< T ln(#terms)
};

/// Softmin of the terms at temperature T, computed with a max shift. Checks
/// min_plus - T ln(#terms) <= readback <= min_plus coordinatewise.
BoltzmannResult boltzmann(const std::vector<BoltzmannTerm>& terms, double temperature);

struct FiltrationLevel {
  std::size_t max_length;
  RetractionOp retraction;
};

/// Retractions onto the texts of word length <= k, for every k at which the
/// subset is nonempty; checks Im(R_k) is contained in Im(R_{k+1}).
std::vector<FiltrationLevel> filtration_retractions(const Plm& m);

}  // namespace tropsem

#include "tropsem/directed_metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tropsem/error.hpp"
#include "tropsem/semiring.hpp"

namespace tropsem {

DirectedMetric::DirectedMetric(std::vector<std::string> labels, Matrix<ExtReal> log, Matrix<Mult> prob, bool from_plm)
    : labels_(std::move(labels)), log_(std::move(log)), prob_(std::move(prob)), from_plm_(from_plm) {
  const std::size_t n = labels_.size();
  if (log_.rows() != n || log_.cols() != n || prob_.rows() != n || prob_.cols() != n)
    throw InvalidInput("directed metric: matrix shape does not match the label count");
  for (std::size_t i = 0; i < n; ++i) {
    if (log_(i, i) != ExtReal(0.0) || prob_(i, i) != Mult(1))
      throw InvalidInput("directed metric: nonzero diagonal at '" + labels_[i] + "'");
    for (std::size_t j = 0; j < n; ++j) {
      const bool same = (log_(i, j).is_pos_inf() == prob_(i, j).is_zero()) &&
                        (log_(i, j).is_neg_inf() == prob_(i, j).is_infinite());
      if (!same) throw InvalidInput("directed metric: log and exact values disagree on infinity at (" +
                                    labels_[i] + ", " + labels_[j] + ")");
    }
  }
}

DirectedMetric DirectedMetric::from_log(std::vector<std::string> labels, const Matrix<ExtReal>& log) {
  Matrix<Mult> prob = log.map([](const ExtReal& x) {
    if (x.is_pos_inf()) return Mult::zero();
    if (x.is_neg_inf()) return Mult::infinite();
    if (x.value() == 0.0) return Mult(1);
    return Mult(exp_neg_surrogate(x.value()));
  });
  return DirectedMetric(std::move(labels), log, std::move(prob), false);
}

DirectedMetric DirectedMetric::from_prob(std::vector<std::string> labels, const Matrix<Mult>& prob, bool from_plm) {
  Matrix<ExtReal> log = prob.map([](const Mult& p) { return p.to_log(); });
  return DirectedMetric(std::move(labels), std::move(log), prob, from_plm);
}

bool DirectedMetric::has_neg_inf() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (log_(i, j).is_neg_inf()) return true;
  return false;
}

DirectedMetric DirectedMetric::transpose() const {
  return DirectedMetric(labels_, log_.transpose(), prob_.transpose(), from_plm_);
}

DirectedMetric metric_from_plm(const Plm& m) {
  const auto report = validate_plm(m);
  if (!report.ok()) {
    std::string msg = "invalid model:";
    for (const auto& line : report.describe(m)) msg += "\n  " + line;
    throw InvalidInput(msg);
  }
  const std::size_t n = m.size();
  const PartialOrder ord = m.order();
  auto prob = Matrix<Mult>::square(n, Mult::zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ord.leq(i, j)) prob(i, j) = Mult(*m.probability(i, j));
  return DirectedMetric::from_prob(m.labels(), prob, true);
}

Plm plm_from_metric(const DirectedMetric& d) {
  Plm m;
  m.mode = OrderMode::Explicit;
  for (const auto& label : d.labels()) {
    Text t;
    if (label != "<empty>") {
      std::istringstream is(label);
      std::string tok;
      while (is >> tok) t.push_back(tok);
    }
    m.texts.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j || d.prob(i, j).is_zero()) continue;
      if (d.prob(i, j).is_infinite()) throw InvalidInput("plm_from_metric: -inf distance has no probability");
      m.pr[{i, j}] = d.prob(i, j).rational();
      if (m.pr[{i, j}] > 1) m.extended_values = true;
    }
  return m;
}

OrderFromMetric order_from_metric(const DirectedMetric& d) {
  OrderFromMetric out;
  out.relation = PartialOrder(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) out.relation.set(i, j, !d.log(i, j).is_pos_inf());
  out.antisymmetric = out.relation.is_antisymmetric();
  out.transitive = out.relation.is_transitive();
  return out;
}

bool check_projector(const DirectedMetric& d) { return is_projector<MaxTimes>(d.prob_matrix()); }

bool check_projector_log(const Matrix<ExtReal>& d) {
  if (!d.is_square()) return false;
  const auto sq = compose<MinPlus>(d, d);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!approx_equal(sq(i, j), d(i, j))) return false;
  return true;
}

MetricCheck check_metric(const DirectedMetric& d) {
  MetricCheck out;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    if (d.prob(i, i) != Mult(1) || d.log(i, i) != ExtReal(0.0)) {
      out.zero_diagonal = false;
      out.failures.push_back("nonzero diagonal at '" + d.label(i) + "'");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (d.prob(i, k) >= mul_zero_absorbing(d.prob(i, j), d.prob(j, k))) continue;
        out.triangle = false;
        out.failures.push_back("triangle fails: d(" + d.label(i) + "," + d.label(k) + ") > d(" + d.label(i) + "," +
                               d.label(j) + ") + d(" + d.label(j) + "," + d.label(k) + ")");
      }
  return out;
}

DirectedMetric one_word_matrix(const Plm& m) {
  const DirectedMetric d = metric_from_plm(m);
  const PartialOrder ord = m.order();
  const std::size_t n = m.size();
  auto keep = Matrix<std::uint8_t>::square(n, 0);
  for (std::size_t i = 0; i < n; ++i) keep(i, i) = 1;
  if (m.mode == OrderMode::Explicit) {
    for (const auto& [i, j] : ord.covers()) keep(i, j) = 1;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (ord.less(i, j) && m.texts[j].size() == m.texts[i].size() + 1) keep(i, j) = 1;
  }
  auto prob = d.prob_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!keep(i, j)) prob(i, j) = Mult::zero();
  return DirectedMetric::from_prob(d.labels(), prob, true);
}

KleeneResult kleene_closure(const DirectedMetric& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.log(i, j) < ExtReal(0.0))
        throw InvalidInput("kleene_closure: entries must lie in [0, +inf]");
  // Nonnegative weights: simple paths suffice, so both closures stabilize by power n.
  const auto exact = stable_power<MaxTimes>(c.prob_matrix(), n + 1);
  const auto log = stable_power<MinPlus>(c.log_matrix(), n + 1);
  if (!exact || !log) throw VerificationError("kleene_closure: powers did not stabilize");
  return {DirectedMetric(c.labels(), log->matrix, exact->matrix, c.from_plm()), exact->power};
}

BigMResult truncate_big_m(const DirectedMetric& d, double big_m) {
  if (!std::isfinite(big_m) || big_m <= 0) throw InvalidInput("big-M value must be finite and positive");
  if (d.has_neg_inf()) throw InvalidInput("big-M truncation needs entries in [0, +inf]");
  double max_finite = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d.log(i, j).is_finite()) max_finite = std::max(max_finite, d.log(i, j).value());

  auto log = d.log_matrix();
  auto prob = d.prob_matrix();
  const Mult surrogate(exp_neg_surrogate(big_m));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (log(i, j).is_pos_inf()) {
        log(i, j) = ExtReal(big_m);
        prob(i, j) = surrogate;
      }
  BigMResult out{DirectedMetric(d.labels(), std::move(log), std::move(prob), false), false, std::nullopt};
  out.projector = check_projector(out.metric);
  if (big_m <= max_finite) {
    std::ostringstream os;
    os << "M = " << big_m << " does not exceed the largest finite distance " << max_finite;
    out.warning = os.str();
  }
  if (!out.projector) {
    out.warning = out.warning.value_or("") + (out.warning ? "; " : "") + "truncated matrix is not a projector";
    if (big_m >= 2 * max_finite) throw VerificationError("big-M truncation lost the triangle inequality");
  }
  return out;
}

}  // namespace tropsem

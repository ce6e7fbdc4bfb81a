#include "tropsem/extension.hpp"

#include <algorithm>
#include <cmath>

#include "tropsem/error.hpp"
#include "tropsem/polyhedron.hpp"
#include "tropsem/semiring.hpp"

namespace tropsem {

Embedding::Embedding(DirectedMetric sub, DirectedMetric big, std::vector<std::size_t> mapping)
    : sub_(std::move(sub)), big_(std::move(big)), mapping_(std::move(mapping)) {}

ExtVector Embedding::extend(const ExtVector& x) const {
  if (x.size() != sub_.size()) throw InvalidInput("extend: length mismatch");
  ExtVector out(big_.size(), ExtReal::pos_inf());
  for (std::size_t i = 0; i < big_.size(); ++i)
    for (std::size_t m = 0; m < x.size(); ++m) out[i] = tmin(out[i], tmul(x[m], big_.log(i, mapping_[m])));
  return out;
}

MultVector Embedding::extend_exact(const MultVector& z) const {
  if (z.size() != sub_.size()) throw InvalidInput("extend: length mismatch");
  MultVector out(big_.size(), Mult::zero());
  for (std::size_t i = 0; i < big_.size(); ++i)
    for (std::size_t m = 0; m < z.size(); ++m)
      out[i] = MaxTimes::add(out[i], MaxTimes::mul(z[m], big_.prob(i, mapping_[m])));
  return out;
}

Embedding embed_model(const DirectedMetric& sub, const DirectedMetric& big, const std::vector<std::size_t>& mapping) {
  if (mapping.size() != sub.size()) throw InvalidInput("embed_model: mapping length differs from the sub-model size");
  for (std::size_t a = 0; a < mapping.size(); ++a) {
    if (mapping[a] >= big.size()) throw InvalidInput("embed_model: mapping index out of range");
    for (std::size_t b = 0; b < a; ++b)
      if (mapping[a] == mapping[b]) throw InvalidInput("embed_model: mapping is not injective");
  }
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = 0; b < sub.size(); ++b)
      if (sub.prob(a, b) != big.prob(mapping[a], mapping[b]))
        throw InvalidInput("embed_model: not an isometry at (" + sub.label(a) + ", " + sub.label(b) + "): " +
                           to_string(sub.log(a, b)) + " != " + to_string(big.log(mapping[a], mapping[b])));
  Embedding e(sub, big, mapping);
  for (std::size_t a = 0; a < sub.size(); ++a)
    if (e.extend_exact(yoneda_q(sub, a)) != yoneda_q(big, mapping[a]))
      throw VerificationError("embed_model: extension does not carry Y(a) to Y(phi a)");
  return e;
}

Embedding embed_model(const Plm& sub, const Plm& big, const std::vector<std::size_t>& mapping) {
  return embed_model(metric_from_plm(sub), metric_from_plm(big), mapping);
}

std::optional<ExtVector> RetractionOp::apply(const ExtVector& x) const {
  auto out = apply_matrix(x);
  if (all_pos_inf(out)) return std::nullopt;
  return out;
}

std::optional<MultVector> RetractionOp::apply_exact(const MultVector& z) const {
  auto out = tropsem::apply<MaxTimes>(prob, z);
  if (std::all_of(out.begin(), out.end(), [](const Mult& m) { return m.is_zero(); })) return std::nullopt;
  return out;
}

ExtVector RetractionOp::apply_matrix(const ExtVector& x) const { return tropsem::apply<MinPlus>(log, x); }

RetractionOp retraction_from_subset(const DirectedMetric& big, std::vector<std::size_t> subset) {
  if (subset.empty()) throw InvalidInput("retraction: empty subset");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.back() >= big.size()) throw InvalidInput("retraction: subset index out of range");
  const std::size_t n = big.size();
  RetractionOp r{subset, Matrix<ExtReal>::square(n, ExtReal::pos_inf()), Matrix<Mult>::square(n, Mult::zero())};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (auto j : subset) {
        r.log(i, k) = tmin(r.log(i, k), tmul(big.log(i, j), big.log(j, k)));
        r.prob(i, k) = MaxTimes::add(r.prob(i, k), MaxTimes::mul(big.prob(i, j), big.prob(j, k)));
      }
  if (!is_projector<MaxTimes>(r.prob)) throw VerificationError("retraction: R o R != R");
  for (auto b : subset) {
    const auto yb = yoneda_q(big, b);
    if (tropsem::apply<MaxTimes>(r.prob, yb) != yb) throw VerificationError("retraction: R(Y(b)) != Y(b)");
  }
  return r;
}

std::vector<WordTerm> word_decompose(const DirectedMetric& big, const std::vector<std::size_t>& words,
                                     std::size_t text) {
  if (text >= big.size()) throw InvalidInput("word_decompose: text index out of range");
  for (auto w : words) {
    if (w >= big.size()) throw InvalidInput("word_decompose: word index out of range");
    for (auto v : words)
      if (v != w && !big.log(w, v).is_pos_inf())
        throw InvalidInput("word_decompose: '" + big.label(w) + "' and '" + big.label(v) + "' are at finite distance");
  }
  std::vector<WordTerm> terms;
  for (auto w : words)
    if (!big.log(w, text).is_pos_inf()) terms.push_back({w, big.log(w, text), big.prob(w, text)});
  if (terms.empty()) throw InvalidInput("word_decompose: no listed word lies below '" + big.label(text) + "'");

  const RetractionOp r = retraction_from_subset(big, words);
  MultVector combo(big.size(), Mult::zero());
  for (const auto& t : terms) {
    const auto yw = yoneda_q(big, t.word);
    for (std::size_t i = 0; i < big.size(); ++i) combo[i] = MaxTimes::add(combo[i], MaxTimes::mul(t.exp_weight, yw[i]));
  }
  if (r.apply_exact(yoneda_q(big, text)) != combo)
    throw VerificationError("word_decompose: combination differs from R(Y(b))");
  return terms;
}

std::vector<WordTerm> word_decompose(const Plm& big, const std::vector<std::size_t>& words, std::size_t text) {
  return word_decompose(metric_from_plm(big), words, text);
}

BoltzmannResult boltzmann(const std::vector<BoltzmannTerm>& terms, double temperature) {
  if (!(temperature > 0) || !std::isfinite(temperature)) throw InvalidInput("temperature must be positive");
  if (terms.empty()) throw InvalidInput("boltzmann: no terms");
  const std::size_t n = terms.front().x.size();
  for (const auto& t : terms) {
    if (t.x.size() != n) throw InvalidInput("boltzmann: vectors of different lengths");
    if (t.lambda.is_neg_inf()) throw InvalidInput("boltzmann: -inf coefficient");
    for (const auto& v : t.x)
      if (v.is_neg_inf()) throw InvalidInput("boltzmann: -inf coordinate");
  }
  BoltzmannResult res;
  res.temperature = temperature;
  res.bound = temperature * std::log(static_cast<double>(terms.size()));
  res.readback.assign(n, ExtReal::pos_inf());
  res.min_plus.assign(n, ExtReal::pos_inf());
  res.v.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> a;
    for (const auto& t : terms) {
      const ExtReal s = tmul(t.lambda, t.x[i]);
      res.min_plus[i] = tmin(res.min_plus[i], s);
      if (s.is_finite()) a.push_back(s.value());
    }
    if (a.empty()) continue;
    const double m = *std::min_element(a.begin(), a.end());
    double sum = 0.0;
    for (double ai : a) sum += std::exp(-(ai - m) / temperature);
    const double rb = m - temperature * std::log(sum);
    res.readback[i] = ExtReal(rb);
    res.v[i] = std::exp(-rb / temperature);
    const double tol = kLogTolerance * std::max(1.0, std::fabs(m));
    if (rb > m + tol || rb < m - res.bound - tol)
      throw VerificationError("boltzmann: readback outside the log-sum-exp bound");
  }
  const bool exact = temperature == 1.0 && std::all_of(terms.begin(), terms.end(), [](const BoltzmannTerm& t) {
    return t.exp_lambda && t.exp_x && !t.exp_lambda->is_infinite();
  });
  if (exact) {
    QVector v(n, Rational(0));
    for (const auto& t : terms) {
      if (t.exp_x->size() != n) throw InvalidInput("boltzmann: exact vector length mismatch");
      for (std::size_t i = 0; i < n; ++i) {
        const Mult p = mul_zero_absorbing(*t.exp_lambda, (*t.exp_x)[i]);
        if (p.is_infinite()) throw InvalidInput("boltzmann: infinite exact weight");
        v[i] += p.rational();
      }
    }
    res.exact_v = std::move(v);
  }
  return res;
}

std::vector<FiltrationLevel> filtration_retractions(const Plm& m) {
  const DirectedMetric d = metric_from_plm(m);
  std::size_t longest = 0;
  for (const auto& t : m.texts) longest = std::max(longest, t.size());
  std::vector<FiltrationLevel> out;
  for (std::size_t k = 1; k <= longest; ++k) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.texts[i].size() <= k) subset.push_back(i);
    if (subset.empty()) continue;
    out.push_back({k, retraction_from_subset(d, subset)});
  }
  for (std::size_t l = 0; l + 1 < out.size(); ++l) {
    const auto& inner = out[l].retraction;
    const auto& outer = out[l + 1].retraction;
    for (std::size_t c = 0; c < m.size(); ++c) {
      const MultVector col = inner.prob.col(c);
      if (std::all_of(col.begin(), col.end(), [](const Mult& v) { return v.is_zero(); })) continue;
      if (tropsem::apply<MaxTimes>(outer.prob, col) != col)
        throw VerificationError("filtration: Im(R_k) is not contained in Im(R_{k+1})");
    }
  }
  return out;
}

}  // namespace tropsem

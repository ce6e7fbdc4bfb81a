#include "tropsem/duality.hpp"

#include "tropsem/error.hpp"

namespace tropsem {

namespace {

// (+)_j lambda_j (.) v_j coordinatewise, (min,+).
ExtVector combine(const std::vector<ExtReal>& lambda, const std::vector<ExtVector>& vs, std::size_t n) {
  ExtVector out(n, ExtReal::pos_inf());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) out[i] = tmin(out[i], tmul(lambda[j], vs[j][i]));
  return out;
}

bool agree_on(const ExtVector& a, const ExtVector& b, const std::vector<std::size_t>& coords) {
  for (auto i : coords)
    if (!approx_equal(a[i], b[i])) return false;
  return true;
}

std::vector<std::size_t> all_coords(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

// Identities for the column side of `d`; the row side is the same code on d^t.
void identities(const DirectedMetric& d, std::size_t k, DualIdentity& span, DualIdentity& negation) {
  const std::size_t n = d.size();
  const ExtVector yk = yoneda(d, k);
  std::vector<ExtReal> w, neg_w, all_neg;
  std::vector<ExtVector> cols, rows, all_cols, all_rows;
  for (std::size_t j = 0; j < n; ++j) {
    all_neg.push_back(-yk[j]);
    all_cols.push_back(yoneda(d, j));
    all_rows.push_back(coyoneda(d, j));
    if (d.log(j, k).is_pos_inf()) continue;
    w.push_back(d.log(j, k));
    neg_w.push_back(-d.log(j, k));
    cols.push_back(yoneda(d, j));
    rows.push_back(coyoneda(d, j));
  }
  span.lhs = yk;
  span.rhs = combine(w, cols, n);
  span.full_rhs = combine(yk, all_cols, n);
  span.checked = all_coords(n);
  span.ok = agree_on(span.lhs, span.rhs, span.checked) && agree_on(span.lhs, span.full_rhs, span.checked);

  negation.lhs = negate(yk);
  negation.rhs = combine(neg_w, rows, n);
  negation.full_rhs = combine(all_neg, all_rows, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!yk[i].is_pos_inf()) negation.checked.push_back(i);
  negation.ok = agree_on(negation.lhs, negation.rhs, negation.checked) &&
                agree_on(negation.lhs, negation.full_rhs, all_coords(n));
}

}  // namespace

ExtVector map_a(const DirectedMetric& d, const ExtVector& y) {
  if (y.size() != d.size()) throw InvalidInput("map_a: length mismatch");
  return span_combine(negate(y), d, Side::Lower);
}

ExtVector map_b(const DirectedMetric& d, const ExtVector& x) {
  if (x.size() != d.size()) throw InvalidInput("map_b: length mismatch");
  return span_combine(negate(x), d, Side::Upper);
}

bool check_fixed_negation(const DirectedMetric& d, const ExtVector& x, Side side) {
  if (x.size() != d.size()) throw InvalidInput("check_fixed_negation: length mismatch");
  if (all_pos_inf(x)) return false;
  const Side other = side == Side::Lower ? Side::Upper : Side::Lower;
  const ExtVector nx = negate(x);
  return approx_equal(span_combine(x, d, side), x) && approx_equal(span_combine(nx, d, other), nx);
}

DualReport dual_decompose(const DirectedMetric& d, std::size_t k) {
  if (k >= d.size()) throw InvalidInput("dual_decompose: text index out of range");
  DualReport rep;
  rep.text = k;
  identities(d, k, rep.yoneda_span, rep.yoneda_negation);
  identities(d.transpose(), k, rep.coyoneda_span, rep.coyoneda_negation);
  if (!rep.ok()) throw VerificationError("duality identities fail for '" + d.label(k) + "'");
  return rep;
}

}  // namespace tropsem

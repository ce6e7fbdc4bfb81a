#include "tropsem/funk.hpp"

#include "tropsem/error.hpp"

namespace tropsem {

ExtReal funk(const ExtVector& x, const ExtVector& y) {
  if (x.size() != y.size()) throw InvalidInput("funk: length mismatch");
  ExtReal best = ExtReal::neg_inf();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_pos_inf()) continue;
    best = tmax(best, tmax_mul(y[i], -x[i]));
  }
  return best;
}

Mult funk_exact(const MultVector& z, const MultVector& w) {
  if (z.size() != w.size()) throw InvalidInput("funk_exact: length mismatch");
  Mult best = Mult::infinite();
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) continue;
    // w_i * (1 / z_i) with Infinite absorbing, the image of (max,+).
    const Mult term = mul_inf_absorbing(w[i], z[i].reciprocal());
    if (term < best) best = term;
  }
  return best;
}

ExtReal funk_q(const QVector& z, const QVector& w) { return funk_exact(to_mult(z), to_mult(w)).to_log(); }

}  // namespace tropsem

#pragma once

#include "tropsem/ext_real.hpp"
#include "tropsem/mult.hpp"

namespace tropsem {

/// Funk distance D(x, y) = max{ y_i - x_i : x_i != +inf } in the (max,+)
/// convention; -inf when no index is admissible.
ExtReal funk(const ExtVector& x, const ExtVector& y);

/// Transposed distance D^t(x, y) = D(y, x), used on the copresheaf side.
inline ExtReal funk_t(const ExtVector& x, const ExtVector& y) { return funk(y, x); }

/// e^{-D(x, y)} computed exactly for x = -log z, y = -log w:
/// min{ w_i / z_i : z_i != 0 }, Infinite when no index is admissible.
Mult funk_exact(const MultVector& z, const MultVector& w);

/// Multiplicative-domain Funk distance, equal to D(-log z, -log w).
ExtReal funk_q(const QVector& z, const QVector& w);

}  // namespace tropsem

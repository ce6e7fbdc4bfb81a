#pragma once

#include <cstddef>
#include <vector>

#include "tropsem/directed_metric.hpp"
#include "tropsem/ext_real.hpp"

namespace tropsem {

/// L(x)_i = max_j (d_ij - x_j), (max,+) convention.
ExtVector map_l(const DirectedMetric& d, const ExtVector& x);
/// R(y)_j = max_i (d_ij - y_i), (max,+) convention.
ExtVector map_r(const DirectedMetric& d, const ExtVector& y);

/// L(R(x)) == x.
bool isbell_member(const DirectedMetric& d, const ExtVector& x);

inline constexpr std::size_t kMaxClosureCap = 10000;

/// Closure of P(L) members under pointwise min and max, in discovery order
/// (inputs first). Every new vector is re-verified as a member. Throws
/// InvalidInput on a non-member input and ResourceLimit past `cap` vectors.
std::vector<ExtVector> max_closure(const std::vector<ExtVector>& vectors, const DirectedMetric& d,
                                   std::size_t cap = kMaxClosureCap);

}  // namespace tropsem

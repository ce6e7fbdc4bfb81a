#pragma once

#include <cstddef>
#include <vector>

#include "tropsem/directed_metric.hpp"
#include "tropsem/ext_real.hpp"
#include "tropsem/polyhedron.hpp"

namespace tropsem {

/// A(y) = d_min(-y) over [-inf, inf]^n with +inf absorbing.
ExtVector map_a(const DirectedMetric& d, const ExtVector& y);
/// B(x) = d^t_min(-x).
ExtVector map_b(const DirectedMetric& d, const ExtVector& x);

/// Side::Lower: d_min x = x and d^t_min(-x) = -x (x in P^-(L), -x in P^^-(L)).
/// Side::Upper: the transposed statement. False for the all-+inf vector.
bool check_fixed_negation(const DirectedMetric& d, const ExtVector& x, Side side);

/// Both duality identities for one text, evaluated coordinatewise.
struct DualIdentity {
  ExtVector lhs;        ///< Y(a_k) (resp. -Y(a_k))
  ExtVector rhs;        ///< the restricted combination
  ExtVector full_rhs;   ///< the combination over all j
  std::vector<std::size_t> checked;  ///< coordinates where lhs == rhs is required
  bool ok = false;
};

struct DualReport {
  std::size_t text = 0;
  /// Lower side: Y(a_k) = (+)_{a_j <= a_k} d(a_j,a_k) (.) Y(a_j).
  DualIdentity yoneda_span;
  /// Lower side: -Y(a_k) = (+)_{a_j <= a_k} -d(a_j,a_k) (.) d(a_j,-), on
  /// supp Y(a_k); the unrestricted sum over all j holds everywhere.
  DualIdentity yoneda_negation;
  /// Upper side analogues with rows and columns exchanged.
  DualIdentity coyoneda_span;
  DualIdentity coyoneda_negation;
  bool ok() const { return yoneda_span.ok && yoneda_negation.ok && coyoneda_span.ok && coyoneda_negation.ok; }
};

/// Evaluates the identities for text k; throws VerificationError if one fails.
DualReport dual_decompose(const DirectedMetric& d, std::size_t k);

}  // namespace tropsem

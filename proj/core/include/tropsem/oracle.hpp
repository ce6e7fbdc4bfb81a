#pragma once

#include <cstddef>
#include <vector>

#include "tropsem/directed_metric.hpp"
#include "tropsem/mult.hpp"
#include "tropsem/polyhedron.hpp"

namespace tropsem {

/// Homogeneous inequality y_i >= q * y_j with q > 0.
struct RayConstraint {
  std::size_t i;
  std::size_t j;
  Rational q;
};

/// Inequalities of Q(L) (Side::Lower: z_i >= p_ij z_j) or Q^(L)
/// (Side::Upper: u_i >= p_ji u_j), one per finite off-diagonal entry.
std::vector<RayConstraint> cone_constraints(const DirectedMetric& d, Side side);

/// Positive rescaling with largest coordinate 1.
QVector canonical_ray(const QVector& y);

/// Rank of the inequalities of {y >= 0} and the constraints tight at y.
std::size_t certificate_rank(const QVector& y, const std::vector<RayConstraint>& constraints);

inline constexpr std::size_t kOracleMaxDim = 12;
inline constexpr std::size_t kBruteForceMaxDim = 6;

/// Extremal rays of {y >= 0} intersected with the constraints, by the double
/// description method in exact arithmetic. Canonical form, sorted.
/// Throws ResourceLimit when n > max_n.
std::vector<QVector> oracle_rays(const std::vector<RayConstraint>& constraints, std::size_t n,
                                 std::size_t max_n = kOracleMaxDim);

/// Same set, by solving every (n-1)-subset of the inequalities and keeping
/// feasible one-dimensional solutions. Exponential; n <= max_n.
std::vector<QVector> brute_force_rays(const std::vector<RayConstraint>& constraints, std::size_t n,
                                      std::size_t max_n = kBruteForceMaxDim);

}  // namespace tropsem

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tropsem/directed_metric.hpp"
#include "tropsem/ext_real.hpp"
#include "tropsem/mult.hpp"

namespace tropsem {

/// Lower: P(L), Q(L), Yoneda columns d(-, a_k), lower-set rays.
/// Upper: P^(L), Q^(L), co-Yoneda rows d(a_k, -), upper-set rays.
enum class Side { Lower, Upper };

std::string to_string(Side s);
Side parse_side(const std::string& s);

/// d for Side::Lower, d^t for Side::Upper. Every Upper-side operation is the
/// Lower-side operation on the transposed metric.
DirectedMetric oriented(const DirectedMetric& d, Side side);

/// Throws InvalidInput unless x has length n, is not all +inf, and has no
/// -inf coordinate when allow_neg_inf is false.
void require_vector(const ExtVector& x, std::size_t n, bool allow_neg_inf);
/// Throws InvalidInput unless z has length n and is not all zero.
void require_vector(const MultVector& z, std::size_t n);

/// x_i <= d_ij + x_j for all i, j (Upper: d_ji), with the log tolerance.
/// With allow_neg_inf the extended polyhedron P^-(L) is tested.
bool is_member(const ExtVector& x, const DirectedMetric& d, Side side, bool allow_neg_inf = false);
/// z_i >= p_ij z_j for all i, j (Upper: p_ji), exactly.
bool is_member_exact(const MultVector& z, const DirectedMetric& d, Side side);

ExtVector yoneda(const DirectedMetric& d, std::size_t k);
ExtVector coyoneda(const DirectedMetric& d, std::size_t k);
MultVector yoneda_q(const DirectedMetric& d, std::size_t k);
MultVector coyoneda_q(const DirectedMetric& d, std::size_t k);
/// yoneda on Side::Lower, coyoneda on Side::Upper.
ExtVector embed(const DirectedMetric& d, Side side, std::size_t k);
MultVector embed_q(const DirectedMetric& d, Side side, std::size_t k);

/// (D(Y(a_i), x))_i; throws VerificationError if it differs from x.
ExtVector coordinates_as_distances(const ExtVector& x, const DirectedMetric& d, Side side);
MultVector coordinates_as_distances_exact(const MultVector& z, const DirectedMetric& d, Side side);

/// Coefficients lambda with x = (+)_j lambda_j (.) Y(a_j); lambda = x.
/// Reconstruction is checked and a VerificationError thrown on mismatch.
ExtVector span_decompose(const ExtVector& x, const DirectedMetric& d, Side side);
MultVector span_decompose_exact(const MultVector& z, const DirectedMetric& d, Side side);

/// (+)_j lambda_j (.) column_j of the oriented metric.
ExtVector span_combine(const ExtVector& lambda, const DirectedMetric& d, Side side);
MultVector span_combine_exact(const MultVector& lambda, const DirectedMetric& d, Side side);

/// One application of d_min (Upper: d^t_min).
ExtVector project(const ExtVector& x, const DirectedMetric& d, Side side);
MultVector project_exact(const MultVector& z, const DirectedMetric& d, Side side);

/// Tight inequalities of a member, decided exactly.
struct SaturationGraph {
  std::size_t n = 0;
  /// Loops (i, i) for every vertex plus (i, j) with i != j, both in the
  /// support and z_i = p_ij z_j.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> support;

  bool has_edge(std::size_t i, std::size_t j) const;
  /// Non-loop edges only.
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;
  /// Undirected components among support vertices (face dimension).
  std::size_t components_on_support() const;
  /// Same, with each off-support vertex counted as its own component.
  std::size_t components_total() const;
  /// Least index of every sink strongly connected component of the support.
  std::vector<std::size_t> terminals() const;
};

SaturationGraph saturation_graph(const MultVector& z, const DirectedMetric& d, Side side = Side::Lower);

struct TerminalTerm {
  std::size_t text;
  Mult weight;  ///< e^{-D(Y(b), x)}
  ExtReal log_weight;
};

struct TerminalDecomposition {
  std::vector<TerminalTerm> terms;
  std::size_t face_dimension = 0;  ///< components_on_support
  std::size_t components_total = 0;
};

/// x = (+)_b D(Y(b), x) (.) Y(b) over terminal elements b; exact, checked.
TerminalDecomposition terminal_decompose(const MultVector& z, const DirectedMetric& d, Side side = Side::Lower);

/// z / sum(z), exact.
QVector normalize_to_simplex(const QVector& z);

/// Coordinates of a multiplicative vector with no Infinite entries.
QVector to_rational(const MultVector& z);

}  // namespace tropsem

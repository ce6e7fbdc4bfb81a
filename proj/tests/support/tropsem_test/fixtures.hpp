#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "tropsem/directed_metric.hpp"
#include "tropsem/ext_real.hpp"
#include "tropsem/mult.hpp"
#include "tropsem/plm.hpp"

namespace tropsem::testing {

/// {red, colour, red colour}, two-sided order, Pr(rc|r) = 1/2, Pr(rc|c) = 1/3.
/// Indices: r = 0, c = 1, rc = 2.
Plm example1();
inline constexpr std::size_t kR = 0;
inline constexpr std::size_t kC = 1;
inline constexpr std::size_t kRC = 2;

/// example1 with the empty text at index 0 (then r = 1, c = 2, rc = 3):
/// Pr(r|e) = 1/2, Pr(c|e) = 3/4, Pr(rc|e) = 1/4.
Plm example1_with_empty();

/// Discrete metric on three points, all off-diagonal distances 1, exact
/// surrogate t for e^{-1}.
DirectedMetric d2(const Rational& t);

/// Metric of a Plm given by a rooted forest or a layered poset, with
/// probabilities from a random potential decreasing along the order.
enum class Shape { Forest, Layered };
Plm random_plm(std::mt19937_64& rng, std::size_t n, Shape shape);
/// Alternates shapes by parity of `index`; n uniform in [lo, hi].
Plm random_plm(std::mt19937_64& rng, std::size_t index, std::size_t lo, std::size_t hi);

/// Member of P(L) as a min-plus combination of Yoneda columns with random
/// exact weights in (0, 1] or 0; returned in both domains.
struct Member {
  ExtVector log;
  MultVector exact;
};
Member random_member(std::mt19937_64& rng, const DirectedMetric& d, bool upper = false);

/// Coordinates drawn from finite values in [-range, range], +inf and -inf.
ExtVector random_ext_vector(std::mt19937_64& rng, std::size_t n, double range = 5.0, double p_inf = 0.15,
                            double p_neg_inf = 0.15);

/// Random rational in (0, 1] with small denominator.
Rational random_prob(std::mt19937_64& rng);

}  // namespace tropsem::testing

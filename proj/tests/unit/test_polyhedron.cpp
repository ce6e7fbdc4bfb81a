#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "tropsem/directed_metric.hpp"
#include "tropsem/error.hpp"
#include "tropsem/funk.hpp"
#include "tropsem/polyhedron.hpp"
#include "tropsem_test/fixtures.hpp"

using namespace tropsem;
using tropsem::testing::example1;
using tropsem::testing::kC;
using tropsem::testing::kR;
using tropsem::testing::kRC;

namespace {

const ExtReal kInf = ExtReal::pos_inf();
const double kLn2 = std::log(2.0);
const double kLn3 = std::log(3.0);

DirectedMetric ex1() { return metric_from_plm(example1()); }

ExtVector v(std::initializer_list<double> xs) {
  ExtVector out;
  for (double x : xs) out.emplace_back(x);
  return out;
}

MultVector q(std::initializer_list<Rational> xs) {
  MultVector out;
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

std::vector<DirectedMetric> random_metrics(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<DirectedMetric> out;
  for (std::size_t t = 0; t < count; ++t) out.push_back(metric_from_plm(tropsem::testing::random_plm(rng, t, 3, 7)));
  return out;
}

}  // namespace

TEST(Membership, ExampleCases) {
  const auto d = ex1();
  EXPECT_TRUE(is_member(v({kLn2, kLn3, 0}), d, Side::Lower));
  EXPECT_TRUE(is_member(v({0, 0, 0}), d, Side::Lower));
  EXPECT_TRUE(is_member(v({-1, 0, 0}), d, Side::Lower));
  EXPECT_FALSE(is_member(v({1, 0, 0}), d, Side::Lower));
  EXPECT_TRUE(is_member_exact(q({Rational(1, 2), Rational(1, 3), Rational(1)}), d, Side::Lower));
  EXPECT_FALSE(is_member_exact(q({Rational(1, 3), Rational(1, 3), Rational(1)}), d, Side::Lower));
  EXPECT_THROW(is_member(ExtVector(3, kInf), d, Side::Lower), InvalidInput);
  EXPECT_THROW(is_member(v({0, 0}), d, Side::Lower), InvalidInput);
  EXPECT_THROW(is_member(ExtVector{ExtReal::neg_inf(), ExtReal(0.0), ExtReal(0.0)}, d, Side::Lower), InvalidInput);
  EXPECT_TRUE(is_member(ExtVector{ExtReal::neg_inf(), ExtReal(0.0), ExtReal(0.0)}, d, Side::Lower, true));
}

TEST(Membership, UpperSideUsesRows) {
  const auto d = ex1();
  EXPECT_TRUE(is_member(coyoneda(d, kR), d, Side::Upper));
  // (0, +inf, ln2) is a row, not a column.
  EXPECT_FALSE(is_member(coyoneda(d, kR), d, Side::Lower));
}

TEST(Embeddings, ExampleColumnsAndRows) {
  const auto d = ex1();
  EXPECT_TRUE(approx_equal(yoneda(d, kRC), v({kLn2, kLn3, 0})));
  EXPECT_EQ(yoneda(d, kR), (ExtVector{ExtReal(0.0), kInf, kInf}));
  EXPECT_TRUE(approx_equal(coyoneda(d, kR), ExtVector{ExtReal(0.0), kInf, ExtReal(kLn2)}));
  EXPECT_EQ(coyoneda(d, kRC), (ExtVector{kInf, kInf, ExtReal(0.0)}));
  EXPECT_EQ(yoneda_q(d, kRC), q({Rational(1, 2), Rational(1, 3), Rational(1)}));
  EXPECT_THROW(yoneda(d, 3), InvalidInput);
}

TEST(Embeddings, IsometryOnRandomModels) {
  for (const auto& d : random_metrics(31, 40)) {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(yoneda(d, i)[i], ExtReal(0.0));
      EXPECT_TRUE(is_member(yoneda(d, i), d, Side::Lower));
      EXPECT_TRUE(is_member(coyoneda(d, i), d, Side::Upper));
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(funk_exact(yoneda_q(d, i), yoneda_q(d, j)), d.prob(i, j));
        EXPECT_EQ(funk_exact(coyoneda_q(d, i), coyoneda_q(d, j)), d.prob(j, i));
        EXPECT_TRUE(approx_equal(funk(yoneda(d, i), yoneda(d, j)), d.log(i, j)));
      }
    }
  }
}

TEST(Coordinates, DistancesReproduceMembers) {
  const auto d = ex1();
  EXPECT_TRUE(approx_equal(coordinates_as_distances(v({kLn2, kLn3, 0}), d, Side::Lower), v({kLn2, kLn3, 0})));
  EXPECT_THROW(coordinates_as_distances(v({1, 0, 0}), d, Side::Lower), InvalidInput);

  Plm single;
  single.texts = {{"only"}};
  const auto s = metric_from_plm(single);
  EXPECT_EQ(coordinates_as_distances(v({0}), s, Side::Lower), v({0}));

  std::mt19937_64 rng(32);
  for (const auto& m : random_metrics(33, 30))
    for (Side side : {Side::Lower, Side::Upper}) {
      const auto x = tropsem::testing::random_member(rng, m, side == Side::Upper);
      EXPECT_EQ(coordinates_as_distances_exact(x.exact, m, side), x.exact);
      EXPECT_TRUE(approx_equal(coordinates_as_distances(x.log, m, side), x.log));
    }
}

TEST(Span, DecompositionExamples) {
  const auto d = ex1();
  EXPECT_EQ(span_decompose(v({0, 0, 0}), d, Side::Lower), v({0, 0, 0}));
  const auto lambda = span_decompose_exact(yoneda_q(d, kRC), d, Side::Lower);
  EXPECT_EQ(lambda, q({Rational(1, 2), Rational(1, 3), Rational(1)}));
  EXPECT_EQ(span_combine_exact(lambda, d, Side::Lower), yoneda_q(d, kRC));
}

TEST(Span, LinearSystemForEveryText) {
  auto metrics = random_metrics(34, 40);
  metrics.push_back(ex1());
  for (const auto& d : metrics) {
    const std::size_t n = d.size();
    for (std::size_t k = 0; k < n; ++k) {
      // Y(a_k) = (+)_{j} d_jk (.) Y(a_j) and the co-Yoneda counterpart.
      MultVector col(n), row(n);
      for (std::size_t j = 0; j < n; ++j) {
        col[j] = d.prob(j, k);
        row[j] = d.prob(k, j);
      }
      EXPECT_EQ(span_combine_exact(col, d, Side::Lower), yoneda_q(d, k));
      EXPECT_EQ(span_combine_exact(row, d, Side::Upper), coyoneda_q(d, k));
    }
  }
}

TEST(Project, ExampleAndFixedPoints) {
  const auto d = ex1();
  EXPECT_TRUE(approx_equal(project(v({1, 0, 0}), d, Side::Lower), v({kLn2, 0, 0})));
  const auto member = v({kLn2, kLn3, 0});
  EXPECT_EQ(project(member, d, Side::Lower), member);
}

TEST(Project, MembershipIffFixedPoint) {
  std::mt19937_64 rng(35);
  for (const auto& d : random_metrics(36, 30)) {
    for (int t = 0; t < 20; ++t) {
      auto x = tropsem::testing::random_ext_vector(rng, d.size(), 3.0, 0.2, 0.0);
      if (all_pos_inf(x)) x[0] = ExtReal(0.0);
      for (Side side : {Side::Lower, Side::Upper}) {
        const auto p = project(x, d, side);
        EXPECT_EQ(is_member(x, d, side), approx_equal(p, x));
        EXPECT_TRUE(is_member(p, d, side));
        EXPECT_TRUE(approx_equal(project(p, d, side), p));
      }
    }
  }
}

TEST(Project, TriangleRestatementOnMembers) {
  std::mt19937_64 rng(37);
  for (const auto& d : random_metrics(38, 30)) {
    const auto x = tropsem::testing::random_member(rng, d);
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) {
        const Mult lhs = funk_exact(yoneda_q(d, i), x.exact);
        const Mult rhs = mul_zero_absorbing(funk_exact(yoneda_q(d, i), yoneda_q(d, j)),
                                            funk_exact(yoneda_q(d, j), x.exact));
        EXPECT_GE(lhs, rhs);
      }
  }
}

TEST(Saturation, ExampleGraphs) {
  const auto d = ex1();
  const auto g = saturation_graph(yoneda_q(d, kRC), d);
  EXPECT_EQ(g.arcs(), (std::vector<std::pair<std::size_t, std::size_t>>{{kR, kRC}, {kC, kRC}}));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(g.has_edge(i, i));

  const auto interior = saturation_graph(q({Rational(1), Rational(1), Rational(1)}), d);
  EXPECT_TRUE(interior.arcs().empty());

  const auto yr = saturation_graph(yoneda_q(d, kR), d);
  EXPECT_TRUE(yr.arcs().empty());
  EXPECT_EQ(yr.support, std::vector<std::size_t>{kR});
  EXPECT_EQ(yr.components_on_support(), 1U);
  EXPECT_EQ(yr.components_total(), 3U);

  EXPECT_THROW(saturation_graph(q({Rational(1), Rational(1), Rational(3)}), d), InvalidInput);
}

TEST(Terminal, ExampleDecompositions) {
  const auto d = ex1();
  const auto y = terminal_decompose(yoneda_q(d, kRC), d);
  ASSERT_EQ(y.terms.size(), 1U);
  EXPECT_EQ(y.terms[0].text, kRC);
  EXPECT_EQ(y.terms[0].weight, Mult(1));
  EXPECT_EQ(y.face_dimension, 1U);

  const auto z = terminal_decompose(q({Rational(1), Rational(1), Rational(1)}), d);
  ASSERT_EQ(z.terms.size(), 3U);
  for (const auto& t : z.terms) EXPECT_EQ(t.weight, Mult(1));
  EXPECT_EQ(z.face_dimension, 3U);
}

TEST(Terminal, RandomMembersReconstruct) {
  std::mt19937_64 rng(39);
  for (const auto& d : random_metrics(40, 40))
    for (Side side : {Side::Lower, Side::Upper}) {
      const auto x = tropsem::testing::random_member(rng, d, side == Side::Upper);
      const auto dec = terminal_decompose(x.exact, d, side);
      MultVector lambda(d.size(), Mult::zero());
      for (const auto& t : dec.terms) lambda[t.text] = t.weight;
      EXPECT_EQ(span_combine_exact(lambda, d, side), x.exact);
      EXPECT_GE(dec.face_dimension, 1U);
      EXPECT_LE(dec.face_dimension, dec.components_total);
    }
}

TEST(Simplex, Normalization) {
  EXPECT_EQ(normalize_to_simplex({Rational(1, 2), Rational(1, 3), Rational(1)}),
            (QVector{Rational(3, 11), Rational(2, 11), Rational(6, 11)}));
  EXPECT_EQ(normalize_to_simplex({Rational(1), Rational(0), Rational(0)}),
            (QVector{Rational(1), Rational(0), Rational(0)}));
  EXPECT_THROW(normalize_to_simplex({Rational(0), Rational(0)}), InvalidInput);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    QVector z;
    for (int i = 0; i < 5; ++i) z.push_back(tropsem::testing::random_prob(rng));
    Rational sum = 0;
    for (const auto& x : normalize_to_simplex(z)) sum += x;
    EXPECT_EQ(sum, 1);
  }
}

TEST(Sides, OrientationAndParsing) {
  const auto d = ex1();
  EXPECT_EQ(oriented(d, Side::Upper).log_matrix(), d.transpose().log_matrix());
  EXPECT_EQ(parse_side("upper"), Side::Upper);
  EXPECT_EQ(to_string(Side::Lower), "lower");
  EXPECT_THROW(parse_side("middle"), InvalidInput);
}

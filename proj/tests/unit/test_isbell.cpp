#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tropsem/directed_metric.hpp"
#include "tropsem/error.hpp"
#include "tropsem/funk.hpp"
#include "tropsem/isbell.hpp"
#include "tropsem/polyhedron.hpp"
#include "tropsem_test/fixtures.hpp"

using namespace tropsem;
using tropsem::testing::example1;
using tropsem::testing::kC;
using tropsem::testing::kR;
using tropsem::testing::kRC;

namespace {

const ExtReal kInf = ExtReal::pos_inf();

ExtVector v(std::initializer_list<double> xs) {
  ExtVector out;
  for (double x : xs) out.emplace_back(x);
  return out;
}

DirectedMetric d2() { return tropsem::testing::d2(Rational(1, 3)); }

std::vector<DirectedMetric> random_metrics(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<DirectedMetric> out;
  for (std::size_t t = 0; t < count; ++t) out.push_back(metric_from_plm(tropsem::testing::random_plm(rng, t, 3, 7)));
  out.push_back(d2());
  return out;
}

}  // namespace

TEST(MapL, Examples) {
  const auto d = metric_from_plm(example1());
  EXPECT_EQ(map_l(d, coyoneda(d, kR)), yoneda(d, kR));
  EXPECT_EQ(map_l(d2(), v({0, 0, 0})), v({1, 1, 1}));
}

TEST(MapR, Examples) {
  EXPECT_EQ(map_r(d2(), v({0, 0, 1})), v({1, 1, 1}));
  EXPECT_EQ(map_r(d2(), v({0, 1, 1})), v({0, 1, 1}));
  const auto d = metric_from_plm(example1());
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(approx_equal(map_r(d, yoneda(d, k)), coyoneda(d, k)));
}

TEST(MapL, Antilinear) {
  std::mt19937_64 rng(81);
  for (const auto& d : random_metrics(82, 10))
    for (int t = 0; t < 10; ++t) {
      const auto x = tropsem::testing::random_ext_vector(rng, d.size());
      EXPECT_TRUE(approx_equal(map_l(d, shift(ExtReal(1.5), x)), shift(ExtReal(-1.5), map_l(d, x))));
    }
}

TEST(Isbell, LrlAndRlrOnRandomVectors) {
  std::mt19937_64 rng(83);
  const auto metrics = random_metrics(84, 20);
  for (int t = 0; t < 1000; ++t) {
    const auto& d = metrics[static_cast<std::size_t>(t) % metrics.size()];
    const auto x = tropsem::testing::random_ext_vector(rng, d.size());
    EXPECT_TRUE(approx_equal(map_l(d, map_r(d, map_l(d, x))), map_l(d, x)));
    EXPECT_TRUE(approx_equal(map_r(d, map_l(d, map_r(d, x))), map_r(d, x)));
    const auto y = tropsem::testing::random_ext_vector(rng, d.size());
    EXPECT_TRUE(approx_equal(funk_t(map_l(d, x), y), funk(x, map_r(d, y))));
  }
}

TEST(Isbell, YonedaCompatibility) {
  for (const auto& d : random_metrics(85, 40))
    for (std::size_t k = 0; k < d.size(); ++k) {
      EXPECT_TRUE(approx_equal(map_r(d, yoneda(d, k)), coyoneda(d, k)));
      EXPECT_TRUE(approx_equal(map_l(d, coyoneda(d, k)), yoneda(d, k)));
      EXPECT_TRUE(isbell_member(d, yoneda(d, k)));
    }
}

TEST(Isbell, FixedPartsAreIsometric) {
  std::mt19937_64 rng(86);
  for (const auto& d : random_metrics(87, 20))
    for (int t = 0; t < 10; ++t) {
      const auto x = map_l(d, tropsem::testing::random_ext_vector(rng, d.size(), 3.0, 0.1, 0.0));
      const auto x2 = map_l(d, tropsem::testing::random_ext_vector(rng, d.size(), 3.0, 0.1, 0.0));
      EXPECT_TRUE(isbell_member(d, x));
      EXPECT_TRUE(approx_equal(funk(x, x2), funk_t(map_r(d, x), map_r(d, x2))));
    }
}

TEST(Isbell, D2WitnessesStrictContainment) {
  const auto d = d2();
  EXPECT_TRUE(isbell_member(d, v({0, 0, 0})));
  EXPECT_TRUE(is_member(v({0, 0, 1}), d, Side::Lower));
  EXPECT_EQ(map_l(d, map_r(d, v({0, 0, 1}))), v({0, 0, 0}));
  EXPECT_FALSE(isbell_member(d, v({0, 0, 1})));
}

TEST(MaxClosure, D2PairProducesNonIsbellMember) {
  const auto d = d2();
  const auto closure = max_closure({yoneda(d, 0), yoneda(d, 1)}, d);
  EXPECT_NE(std::find(closure.begin(), closure.end(), v({1, 1, 1})), closure.end());
  EXPECT_NE(std::find(closure.begin(), closure.end(), v({0, 0, 1})), closure.end());
  for (const auto& x : closure) EXPECT_TRUE(is_member(x, d, Side::Lower));
}

TEST(MaxClosure, SingleVectorAndExample) {
  const auto d = metric_from_plm(example1());
  EXPECT_EQ(max_closure({yoneda(d, kR)}, d), std::vector<ExtVector>{yoneda(d, kR)});
  const auto closure = max_closure({yoneda(d, kR), yoneda(d, kC), yoneda(d, kRC)}, d);
  const ExtVector rc_min{ExtReal(0.0), ExtReal(0.0), kInf};
  EXPECT_NE(std::find(closure.begin(), closure.end(), rc_min), closure.end());
  EXPECT_THROW(max_closure({v({1, 0, 0})}, d), InvalidInput);
  EXPECT_THROW(max_closure({yoneda(d, kR), yoneda(d, kC), yoneda(d, kRC)}, d, 2), ResourceLimit);
}

TEST(MaxClosure, MembershipPreservedOnRandomPairs) {
  std::mt19937_64 rng(88);
  const auto metrics = random_metrics(89, 25);
  for (int t = 0; t < 500; ++t) {
    const auto& d = metrics[static_cast<std::size_t>(t) % metrics.size()];
    const auto x = tropsem::testing::random_member(rng, d);
    const auto y = tropsem::testing::random_member(rng, d);
    EXPECT_TRUE(is_member(pointwise_max(x.log, y.log), d, Side::Lower));
    EXPECT_TRUE(is_member(pointwise_min(x.log, y.log), d, Side::Lower));
    if (t % 25 == 0) {
      EXPECT_NO_THROW(max_closure({x.log, y.log}, d));
    }
  }
}

TEST(Isbell, MembersOfCompletionLieInPolyhedron) {
  std::mt19937_64 rng(90);
  for (const auto& d : random_metrics(91, 20))
    for (int t = 0; t < 10; ++t) {
      auto x = map_l(d, tropsem::testing::random_ext_vector(rng, d.size(), 3.0, 0.1, 0.0));
      if (x.end() != std::find(x.begin(), x.end(), ExtReal::neg_inf()) || all_pos_inf(x)) continue;
      EXPECT_TRUE(is_member(x, d, Side::Lower));
    }
}

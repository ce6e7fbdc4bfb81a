#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <random>

#include "tropsem/corpus.hpp"
#include "tropsem/directed_metric.hpp"
#include "tropsem/error.hpp"
#include "tropsem/extension.hpp"
#include "tropsem/funk.hpp"
#include "tropsem/polyhedron.hpp"
#include "tropsem/semiring.hpp"
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

Plm words_rc() {
  Plm m;
  m.mode = OrderMode::TwoSided;
  m.texts = {{"red"}, {"colour"}};
  return m;
}

DirectedMetric restrict_metric(const DirectedMetric& d, const std::vector<std::size_t>& subset) {
  const std::size_t k = subset.size();
  auto prob = Matrix<Mult>::square(k, Mult::zero());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(d.label(subset[a]));
    for (std::size_t b = 0; b < k; ++b) prob(a, b) = d.prob(subset[a], subset[b]);
  }
  return DirectedMetric::from_prob(labels, prob, true);
}

std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> out;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) out.push_back(i);
  if (out.empty()) out.push_back(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  return out;
}

}  // namespace

TEST(Embed, WordsIntoExample) {
  const auto e = embed_model(words_rc(), example1(), {kR, kC});
  EXPECT_EQ(e.extend(ExtVector{ExtReal(0.0), kInf}), yoneda(ex1(), kR));
  const auto id = embed_model(example1(), example1(), {0, 1, 2});
  const ExtVector x{ExtReal(kLn2), ExtReal(kLn3), ExtReal(0.0)};
  EXPECT_TRUE(approx_equal(id.extend(x), x));
}

TEST(Embed, Violations) {
  auto sub_log = identity<MinPlus>(std::size_t{2});
  sub_log(0, 1) = ExtReal(1.0);
  auto big_log = identity<MinPlus>(std::size_t{2});
  big_log(0, 1) = ExtReal(2.0);
  const auto sub = DirectedMetric::from_log({"a", "b"}, sub_log);
  const auto big = DirectedMetric::from_log({"a", "b"}, big_log);
  try {
    embed_model(sub, big, {0, 1});
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("(a, b)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(embed_model(words_rc(), example1(), {kR, kR}), InvalidInput);
  EXPECT_THROW(embed_model(words_rc(), example1(), {kR, 7}), InvalidInput);
}

TEST(Embed, ExtensionIsIsometricOnRandomSubModels) {
  std::mt19937_64 rng(101);
  for (std::size_t t = 0; t < 30; ++t) {
    const auto big = metric_from_plm(tropsem::testing::random_plm(rng, t, 3, 7));
    const auto subset = random_subset(rng, big.size());
    const auto sub = restrict_metric(big, subset);
    const auto e = embed_model(sub, big, subset);
    for (int s = 0; s < 5; ++s) {
      const auto x = tropsem::testing::random_member(rng, sub);
      const auto y = tropsem::testing::random_member(rng, sub);
      EXPECT_EQ(funk_exact(e.extend_exact(x.exact), e.extend_exact(y.exact)), funk_exact(x.exact, y.exact));
      EXPECT_TRUE(is_member_exact(e.extend_exact(x.exact), big, Side::Lower));
    }
  }
}

TEST(Retraction, ExampleSubsets) {
  const auto d = ex1();
  const auto r = retraction_from_subset(d, {kR, kC});
  const auto ry = r.apply(yoneda(d, kRC));
  ASSERT_TRUE(ry.has_value());
  EXPECT_TRUE(approx_equal(*ry, ExtVector{ExtReal(kLn2), ExtReal(kLn3), kInf}));
  EXPECT_EQ(*r.apply_exact(yoneda_q(d, kRC)), (MultVector{Mult(Rational(1, 2)), Mult(Rational(1, 3)), Mult::zero()}));

  const auto all = retraction_from_subset(d, {kR, kC, kRC});
  EXPECT_EQ(all.prob, d.prob_matrix());

  const auto top = retraction_from_subset(d, {kRC});
  EXPECT_FALSE(top.apply(yoneda(d, kR)).has_value());
  EXPECT_FALSE(top.apply_exact(yoneda_q(d, kR)).has_value());
  EXPECT_THROW(retraction_from_subset(d, {}), InvalidInput);
}

TEST(Retraction, IdempotentNonExpansiveAndSpanImage) {
  std::mt19937_64 rng(102);
  std::size_t pairs = 0;
  for (std::size_t t = 0; pairs < 1000; ++t) {
    const auto d = metric_from_plm(tropsem::testing::random_plm(rng, t, 3, 7));
    const auto subset = random_subset(rng, d.size());
    const auto r = retraction_from_subset(d, subset);
    EXPECT_TRUE(equal<MaxTimes>(compose<MaxTimes>(r.prob, r.prob), r.prob));
    for (int s = 0; s < 20; ++s, ++pairs) {
      const auto x = tropsem::testing::random_member(rng, d);
      const auto y = tropsem::testing::random_member(rng, d);
      const auto rx = r.apply_exact(x.exact);
      const auto ry = r.apply_exact(y.exact);
      if (!rx || !ry) continue;
      // D(Rx, Ry) <= D(x, y), i.e. e^{-D} does not decrease.
      EXPECT_GE(funk_exact(*rx, *ry), funk_exact(x.exact, y.exact));
      // Rx = (+)_{j in S} x_j (.) Y(b_j).
      MultVector lambda(d.size(), Mult::zero());
      for (auto j : subset) lambda[j] = x.exact[j];
      EXPECT_EQ(span_combine_exact(lambda, d, Side::Lower), *rx);
    }
    for (auto k : subset)
      for (auto l : subset) {
        const auto a = r.apply_exact(yoneda_q(d, k));
        const auto b = r.apply_exact(yoneda_q(d, l));
        EXPECT_GE(funk_exact(*a, *b), d.prob(k, l));
      }
  }
}

TEST(WordDecompose, ExampleAndSingleWord) {
  const auto terms = word_decompose(example1(), {kR, kC}, kRC);
  ASSERT_EQ(terms.size(), 2U);
  EXPECT_EQ(terms[0].word, kR);
  EXPECT_TRUE(approx_equal(terms[0].weight, ExtReal(kLn2)));
  EXPECT_EQ(terms[0].exp_weight, Mult(Rational(1, 2)));
  EXPECT_EQ(terms[1].word, kC);
  EXPECT_TRUE(approx_equal(terms[1].weight, ExtReal(kLn3)));

  const auto single = word_decompose(example1(), {kR, kC}, kR);
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(single[0].weight, ExtReal(0.0));

  EXPECT_THROW(word_decompose(example1(), {kR, kRC}, kRC), InvalidInput);
  EXPECT_THROW(word_decompose(example1(), {kC}, kR), InvalidInput);
}

TEST(WordDecompose, CorpusModel) {
  const Plm m = ingest_corpus(tokenize("a b a b"), OrderMode::TwoSided, 2, false);
  const auto labels = m.labels();
  auto idx = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  const auto terms = word_decompose(m, {idx("a"), idx("b")}, idx("a b"));
  ASSERT_EQ(terms.size(), 2U);
  EXPECT_EQ(terms[0].exp_weight, Mult(Rational(1)));
  EXPECT_EQ(terms[1].exp_weight, Mult(Rational(1)));
  const auto ba = word_decompose(m, {idx("a"), idx("b")}, idx("b a"));
  for (const auto& t : ba) EXPECT_EQ(t.exp_weight, Mult(*m.probability(t.word, idx("b a"))));
}

TEST(Boltzmann, ExampleAtUnitTemperatureIsExact) {
  const auto d = ex1();
  std::vector<BoltzmannTerm> terms;
  for (const auto& w : word_decompose(example1(), {kR, kC}, kRC))
    terms.push_back({w.weight, yoneda(d, w.word), w.exp_weight, yoneda_q(d, w.word)});
  const auto res = boltzmann(terms, 1.0);
  ASSERT_TRUE(res.exact_v.has_value());
  EXPECT_EQ(*res.exact_v, (QVector{Rational(1, 2), Rational(1, 3), Rational(0)}));
  EXPECT_NEAR(res.v[0], 0.5, 1e-12);
  EXPECT_EQ(res.v[2], 0.0);
  EXPECT_EQ(res.readback[2], kInf);
  for (double t : {1.0, 0.1, 0.001}) {
    const auto r = boltzmann(terms, t);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_TRUE(approx_leq(r.readback[i], r.min_plus[i]));
      EXPECT_TRUE(approx_leq(r.min_plus[i], tmul(r.readback[i], ExtReal(r.bound))));
    }
  }
}

TEST(Boltzmann, SingleTermAndTightBound) {
  const BoltzmannTerm single{ExtReal(0.7), {ExtReal(1.0), kInf}, std::nullopt, std::nullopt};
  for (double t : {2.0, 1.0, 0.01}) {
    const auto r = boltzmann({single}, t);
    EXPECT_TRUE(approx_equal(r.readback, ExtVector{ExtReal(1.7), kInf}));
  }
  const BoltzmannTerm zero{ExtReal(0.0), {ExtReal(0.0)}, std::nullopt, std::nullopt};
  const auto r = boltzmann({zero, zero}, 1.0);
  EXPECT_TRUE(approx_equal(r.readback[0], ExtReal(-std::log(2.0))));
  EXPECT_NEAR(r.bound, std::log(2.0), 1e-15);
  EXPECT_THROW(boltzmann({zero}, 0.0), InvalidInput);
  EXPECT_THROW(boltzmann({zero}, -1.0), InvalidInput);
}

TEST(Boltzmann, ConvergesMonotonicallyWithoutOverflow) {
  std::vector<BoltzmannTerm> terms = {{ExtReal(800.0), {ExtReal(0.0), ExtReal(5.0)}, std::nullopt, std::nullopt},
                                      {ExtReal(801.0), {ExtReal(-0.5), ExtReal(1.0)}, std::nullopt, std::nullopt}};
  ExtVector prev;
  for (double t : {10.0, 1.0, 0.1, 0.01, 0.001}) {
    const auto r = boltzmann(terms, t);
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_TRUE(r.readback[i].is_finite());
      EXPECT_LE(r.min_plus[i].value() - r.readback[i].value(), r.bound + 1e-9);
      if (!prev.empty()) {
        EXPECT_GE(r.readback[i].value(), prev[i].value() - 1e-9);
      }
    }
    prev = r.readback;
  }
}

TEST(Filtration, ExampleLevels) {
  const auto levels = filtration_retractions(example1());
  ASSERT_EQ(levels.size(), 2U);
  EXPECT_EQ(levels[0].max_length, 1U);
  EXPECT_EQ(levels[0].retraction.subset, (std::vector<std::size_t>{kR, kC}));
  EXPECT_EQ(levels[1].retraction.subset, (std::vector<std::size_t>{kR, kC, kRC}));
  EXPECT_EQ(levels[1].retraction.prob, ex1().prob_matrix());
}

TEST(Filtration, CorpusLevelsAreNested) {
  const Plm m = ingest_corpus(tokenize("the cat sat on the mat"), OrderMode::TwoSided, 3, true);
  const auto levels = filtration_retractions(m);
  ASSERT_FALSE(levels.empty());
  EXPECT_EQ(levels.back().retraction.prob, metric_from_plm(m).prob_matrix());
  for (std::size_t k = 0; k + 1 < levels.size(); ++k)
    for (auto j : levels[k].retraction.subset) {
      MultVector col(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) col[i] = levels[k].retraction.prob(i, j);
      EXPECT_EQ(*levels[k + 1].retraction.apply_exact(col), col);
    }
}

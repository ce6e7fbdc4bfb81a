#include "tropsem_test/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "tropsem/polyhedron.hpp"

namespace tropsem::testing {

Plm example1() {
  Plm m;
  m.texts = {{"red"}, {"colour"}, {"red", "colour"}};
  m.mode = OrderMode::TwoSided;
  m.pr[{kR, kRC}] = Rational(1, 2);
  m.pr[{kC, kRC}] = Rational(1, 3);
  return m;
}

Plm example1_with_empty() {
  Plm m;
  m.texts = {{}, {"red"}, {"colour"}, {"red", "colour"}};
  m.mode = OrderMode::TwoSided;
  m.pr[{0, 1}] = Rational(1, 2);
  m.pr[{0, 2}] = Rational(3, 4);
  m.pr[{0, 3}] = Rational(1, 4);
  m.pr[{1, 3}] = Rational(1, 2);
  m.pr[{2, 3}] = Rational(1, 3);
  return m;
}

DirectedMetric d2(const Rational& t) {
  auto log = Matrix<ExtReal>::square(3, ExtReal(1.0));
  auto prob = Matrix<Mult>::square(3, Mult(t));
  for (std::size_t i = 0; i < 3; ++i) {
    log(i, i) = ExtReal(0.0);
    prob(i, i) = Mult(1);
  }
  return DirectedMetric({"a1", "a2", "a3"}, log, prob, false);
}

Rational random_prob(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 9);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(1, q);
  return Rational(num(rng), q);
}

namespace {

// Strict cover relation (parent, child) as a list of pairs on 0..n-1, where
// index order is a linear extension.
std::vector<std::pair<std::size_t, std::size_t>> forest_covers(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::bernoulli_distribution new_root(0.2);
  for (std::size_t i = 1; i < n; ++i) {
    if (new_root(rng)) continue;
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    out.emplace_back(parent(rng), i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> layered_covers(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> layer_of(n, 0);
  std::uniform_int_distribution<std::size_t> layers_dist(2, std::max<std::size_t>(2, (n + 1) / 2 + 1));
  const std::size_t layers = std::min(layers_dist(rng), n);
  // Every layer nonempty, the rest random.
  for (std::size_t i = 0; i < n; ++i) {
    if (i < layers) {
      layer_of[i] = i;
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, layers - 1);
      layer_of[i] = pick(rng);
    }
  }
  std::sort(layer_of.begin(), layer_of.end());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::bernoulli_distribution link(0.45);
  std::bernoulli_distribution skip(0.1);
  for (std::size_t j = 0; j < n; ++j) {
    if (layer_of[j] == 0) continue;
    bool any = false;
    std::vector<std::size_t> prev;
    for (std::size_t i = 0; i < j; ++i) {
      if (layer_of[i] + 1 == layer_of[j]) {
        prev.push_back(i);
        if (link(rng)) {
          out.emplace_back(i, j);
          any = true;
        }
      } else if (layer_of[i] + 1 < layer_of[j] && skip(rng)) {
        out.emplace_back(i, j);
      }
    }
    if (!any && !prev.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, prev.size() - 1);
      out.emplace_back(prev[pick(rng)], j);
    }
  }
  return out;
}

}  // namespace

Plm random_plm(std::mt19937_64& rng, std::size_t n, Shape shape) {
  auto covers = shape == Shape::Forest ? forest_covers(rng, n) : layered_covers(rng, n);
  // Flip orientation half the time so both roots-at-bottom and roots-at-top occur.
  if (std::bernoulli_distribution(0.5)(rng)) {
    for (auto& [a, b] : covers) {
      a = n - 1 - a;
      b = n - 1 - b;
      std::swap(a, b);
    }
  }
  const PartialOrder order = PartialOrder::closure_of(n, covers);

  // Potential decreasing along the order, assigned in a linear extension.
  std::vector<std::size_t> ext(n);
  std::iota(ext.begin(), ext.end(), 0);
  std::stable_sort(ext.begin(), ext.end(),
                   [&](std::size_t a, std::size_t b) { return order.down(a).size() < order.down(b).size(); });
  std::vector<Rational> pot(n, Rational(0));
  std::uniform_int_distribution<long> base(1, 6);
  for (auto j : ext) {
    Rational cap = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (order.less(i, j) && (cap < 0 || pot[i] < cap)) cap = pot[i];
    pot[j] = cap < 0 ? Rational(base(rng)) : cap * random_prob(rng);
  }

  // Random relabelling so index order is not a linear extension.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  Plm m;
  m.mode = OrderMode::Explicit;
  m.texts.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.texts[perm[i]] = {"t" + std::to_string(i)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (order.less(i, j)) m.pr[{perm[i], perm[j]}] = pot[j] / pot[i];
  return m;
}

Plm random_plm(std::mt19937_64& rng, std::size_t index, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  return random_plm(rng, size(rng), index % 2 == 0 ? Shape::Forest : Shape::Layered);
}

Member random_member(std::mt19937_64& rng, const DirectedMetric& d, bool upper) {
  const std::size_t n = d.size();
  std::bernoulli_distribution absent(0.3);
  MultVector lambda(n, Mult::zero());
  std::uniform_int_distribution<std::size_t> forced(0, n - 1);
  const std::size_t keep = forced(rng);
  for (std::size_t j = 0; j < n; ++j)
    if (j == keep || !absent(rng)) lambda[j] = Mult(random_prob(rng));
  const Side side = upper ? Side::Upper : Side::Lower;
  Member out;
  out.exact = span_combine_exact(lambda, d, side);
  // Surrogate metrics disagree between domains, so combine each domain separately.
  out.log = d.from_plm() ? to_log(out.exact) : span_combine(to_log(lambda), d, side);
  return out;
}

ExtVector random_ext_vector(std::mt19937_64& rng, std::size_t n, double range, double p_inf, double p_neg_inf) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> val(-range, range);
  ExtVector x(n);
  for (auto& v : x) {
    const double r = u(rng);
    if (r < p_inf) {
      v = ExtReal::pos_inf();
    } else if (r < p_inf + p_neg_inf) {
      v = ExtReal::neg_inf();
    } else {
      v = ExtReal(val(rng));
    }
  }
  return x;
}

}  // namespace tropsem::testing

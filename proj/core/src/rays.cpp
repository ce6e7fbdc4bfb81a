#include "tropsem/rays.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "tropsem/error.hpp"
#include "tropsem/oracle.hpp"

namespace tropsem {

std::size_t LowerSet::count() const { return static_cast<std::size_t>(std::popcount(members)); }

std::vector<std::size_t> LowerSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

LowerSet make_set(const std::vector<std::size_t>& elements, const PartialOrder& order) {
  LowerSet s;
  for (auto e : elements) {
    if (e >= order.size() || e >= 64) throw InvalidInput("set element out of range");
    s.members |= std::uint64_t{1} << e;
  }
  s.connected = is_connected_subset(s.members, order);
  return s;
}

bool is_lower_set(std::uint64_t members, const PartialOrder& order) {
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (!((members >> j) & 1U)) continue;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order.leq(i, j) && !((members >> i) & 1U)) return false;
  }
  return true;
}

bool is_connected_subset(std::uint64_t members, const PartialOrder& order) {
  if (members == 0) return false;
  const auto first = static_cast<std::size_t>(std::countr_zero(members));
  std::uint64_t seen = std::uint64_t{1} << first;
  std::vector<std::size_t> stack{first};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < order.size(); ++w) {
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (!(members & bit) || (seen & bit) || !order.comparable(v, w)) continue;
      seen |= bit;
      stack.push_back(w);
    }
  }
  return seen == members;
}

std::vector<Rational> diagonal_scaling(const Plm& m, const std::vector<std::size_t>& references) {
  const auto pots = potentials(m, references);
  std::vector<Rational> w(m.size());
  for (const auto& p : pots)
    for (const auto& [i, v] : p.value) w[i] = v;
  const PartialOrder ord = m.order();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (ord.less(i, j) && *m.probability(i, j) * w[i] != w[j])
        throw VerificationError("diagonal_scaling: constraint not mapped to y_i >= y_j");
  return w;
}

std::vector<LowerSet> enumerate_connected_lower_sets(const PartialOrder& order, std::size_t max_n) {
  const std::size_t n = order.size();
  if (n > max_n || n > 63) throw ResourceLimit("lower-set enumeration capped at " + std::to_string(max_n) + " texts");
  std::vector<std::size_t> ext(n);
  std::iota(ext.begin(), ext.end(), 0);
  std::vector<std::size_t> below(n);
  for (std::size_t i = 0; i < n; ++i) below[i] = order.down(i).size();
  std::stable_sort(ext.begin(), ext.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::uint64_t> preds(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (order.less(i, j)) preds[j] |= std::uint64_t{1} << i;

  std::vector<LowerSet> out;
  std::function<void(std::size_t, std::uint64_t)> dfs = [&](std::size_t t, std::uint64_t mask) {
    if (t == n) {
      if (mask != 0 && is_connected_subset(mask, order)) out.push_back({mask, true});
      return;
    }
    const auto e = ext[t];
    dfs(t + 1, mask);
    if ((preds[e] & mask) == preds[e]) dfs(t + 1, mask | (std::uint64_t{1} << e));
  };
  dfs(0, 0);
  std::sort(out.begin(), out.end(), [](const LowerSet& a, const LowerSet& b) { return a.members < b.members; });
  return out;
}

namespace {

std::optional<std::size_t> principal_of(const LowerSet& c, const PartialOrder& order) {
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::uint64_t down = 0;
    for (auto i : order.down(k)) down |= std::uint64_t{1} << i;
    if (down == c.members) return k;
  }
  return std::nullopt;
}

Ray ray_with(const Plm& m, const PartialOrder& order, const std::vector<RayConstraint>& constraints, const LowerSet& c,
             std::optional<std::size_t> reference) {
  if (c.members == 0) throw InvalidInput("ray_from_lower_set: empty set");
  if (order.size() < 64 && (c.members >> order.size()) != 0) throw InvalidInput("ray_from_lower_set: set out of range");
  if (!is_lower_set(c.members, order)) throw InvalidInput("ray_from_lower_set: not a lower set");
  if (!is_connected_subset(c.members, order)) throw InvalidInput("ray_from_lower_set: set is not connected");
  const std::size_t ref = reference.value_or(static_cast<std::size_t>(std::countr_zero(c.members)));
  if (!c.contains(ref)) throw InvalidInput("ray_from_lower_set: reference outside the set");

  const auto comps = order.components();
  const auto ids = order.component_ids();
  std::vector<std::size_t> refs;
  for (const auto& comp : comps) refs.push_back(comp.front());
  refs[ids[ref]] = ref;
  const auto w = diagonal_scaling(m, refs);

  Ray r;
  r.generator.assign(order.size(), Rational(0));
  for (auto i : c.elements()) r.generator[i] = 1 / w[i];
  r.carrier = {c.members, true};
  r.principal_of = principal_of(c, order);
  r.certificate_rank = certificate_rank(r.generator, constraints);
  if (r.certificate_rank + 1 != order.size())
    throw VerificationError("ray_from_lower_set: tight constraints have rank " + std::to_string(r.certificate_rank));
  return r;
}

}  // namespace

Ray ray_from_lower_set(const Plm& m, const LowerSet& c, std::optional<std::size_t> reference) {
  const DirectedMetric d = metric_from_plm(m);
  return ray_with(m, m.order(), cone_constraints(d, Side::Lower), c, reference);
}

Plm opposite_model(const Plm& m) {
  Plm op;
  op.texts = m.texts;
  op.mode = OrderMode::Explicit;
  op.extended_values = m.extended_values;
  for (const auto& [key, value] : m.pr) op.pr[{key.second, key.first}] = value;
  return op;
}

std::vector<Ray> enumerate_rays(const Plm& m, Side side) {
  const DirectedMetric d = metric_from_plm(m);
  const Plm base = side == Side::Lower ? m : opposite_model(m);
  const PartialOrder order = base.order();
  const auto constraints = cone_constraints(d, side);
  std::vector<Ray> out;
  for (const auto& c : enumerate_connected_lower_sets(order)) {
    Ray r = ray_with(base, order, constraints, c, std::nullopt);
    r.side = side;
    r.generator = canonical_ray(r.generator);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Ray& a, const Ray& b) { return a.generator < b.generator; });
  return out;
}

SaturationGraph ray_saturation_edges(const Ray& r, const Plm& m) {
  const DirectedMetric d = metric_from_plm(m);
  const PartialOrder order = m.order();
  SaturationGraph g = saturation_graph(to_mult(r.generator), d, r.side);
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (auto i : r.carrier.elements())
    for (auto j : r.carrier.elements()) {
      const bool rel = r.side == Side::Lower ? order.less(i, j) : order.less(j, i);
      if (rel) expected.emplace_back(i, j);
    }
  std::sort(expected.begin(), expected.end());
  if (g.arcs() != expected) throw VerificationError("ray saturation graph differs from the carrier's comparabilities");
  return g;
}

std::vector<TextTerm> ray_as_text_combination(const Ray& r, const Plm& m) {
  if (r.side != Side::Lower) throw InvalidInput("ray_as_text_combination: lower-side rays only");
  const auto a0 = m.empty_text_index();
  if (!a0) throw InvalidInput("ray_as_text_combination: the model has no empty text");
  if (!r.carrier.contains(*a0)) throw InvalidInput("ray_as_text_combination: carrier misses the empty text");
  const DirectedMetric d = metric_from_plm(m);
  const PartialOrder order = m.order();
  const auto members = r.carrier.elements();

  std::vector<TextTerm> terms;
  MultVector rebuilt(m.size(), Mult::zero());
  for (auto b : members) {
    const bool maximal = std::none_of(members.begin(), members.end(), [&](std::size_t c) { return order.less(b, c); });
    if (!maximal) continue;
    const Rational p = *m.probability(*a0, b);
    const Mult e(1 / p);
    terms.push_back({b, e.to_log(), e});
    const MultVector yb = yoneda_q(d, b);
    for (std::size_t i = 0; i < m.size(); ++i) rebuilt[i] = std::max(rebuilt[i], mul_zero_absorbing(e, yb[i]));
  }
  MultVector expected;
  for (const auto& v : r.generator) expected.emplace_back(v / r.generator[*a0]);
  if (rebuilt != expected) throw VerificationError("ray_as_text_combination: reconstruction failed");
  return terms;
}

}  // namespace tropsem

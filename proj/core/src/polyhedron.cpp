#include "tropsem/polyhedron.hpp"

#include <algorithm>
#include <numeric>

#include "tropsem/error.hpp"
#include "tropsem/funk.hpp"
#include "tropsem/semiring.hpp"

namespace tropsem {

std::string to_string(Side s) { return s == Side::Lower ? "lower" : "upper"; }

Side parse_side(const std::string& s) {
  if (s == "lower") return Side::Lower;
  if (s == "upper") return Side::Upper;
  throw InvalidInput("side must be 'lower' or 'upper', got '" + s + "'");
}

DirectedMetric oriented(const DirectedMetric& d, Side side) { return side == Side::Lower ? d : d.transpose(); }

void require_vector(const ExtVector& x, std::size_t n, bool allow_neg_inf) {
  if (x.size() != n) throw InvalidInput("vector length " + std::to_string(x.size()) + " != " + std::to_string(n));
  if (all_pos_inf(x)) throw InvalidInput("the all-+inf vector is not a point of the polyhedron");
  if (!allow_neg_inf)
    for (const auto& v : x)
      if (v.is_neg_inf()) throw InvalidInput("-inf coordinate outside the extended polyhedron");
}

void require_vector(const MultVector& z, std::size_t n) {
  if (z.size() != n) throw InvalidInput("vector length " + std::to_string(z.size()) + " != " + std::to_string(n));
  if (std::all_of(z.begin(), z.end(), [](const Mult& m) { return m.is_zero(); }))
    throw InvalidInput("the zero vector is not a point of the cone");
}

namespace {

const ExtReal& entry(const DirectedMetric& d, Side side, std::size_t i, std::size_t j) {
  return side == Side::Lower ? d.log(i, j) : d.log(j, i);
}

const Mult& entry_q(const DirectedMetric& d, Side side, std::size_t i, std::size_t j) {
  return side == Side::Lower ? d.prob(i, j) : d.prob(j, i);
}

}  // namespace

bool is_member(const ExtVector& x, const DirectedMetric& d, Side side, bool allow_neg_inf) {
  require_vector(x, d.size(), allow_neg_inf);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!approx_leq(x[i], tmul(entry(d, side, i, j), x[j]))) return false;
  return true;
}

bool is_member_exact(const MultVector& z, const DirectedMetric& d, Side side) {
  require_vector(z, d.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      if (z[i] < mul_zero_absorbing(entry_q(d, side, i, j), z[j])) return false;
  return true;
}

ExtVector yoneda(const DirectedMetric& d, std::size_t k) {
  if (k >= d.size()) throw InvalidInput("text index out of range");
  return d.log_matrix().col(k);
}

ExtVector coyoneda(const DirectedMetric& d, std::size_t k) {
  if (k >= d.size()) throw InvalidInput("text index out of range");
  return d.log_matrix().row(k);
}

MultVector yoneda_q(const DirectedMetric& d, std::size_t k) {
  if (k >= d.size()) throw InvalidInput("text index out of range");
  return d.prob_matrix().col(k);
}

MultVector coyoneda_q(const DirectedMetric& d, std::size_t k) {
  if (k >= d.size()) throw InvalidInput("text index out of range");
  return d.prob_matrix().row(k);
}

ExtVector embed(const DirectedMetric& d, Side side, std::size_t k) {
  return side == Side::Lower ? yoneda(d, k) : coyoneda(d, k);
}

MultVector embed_q(const DirectedMetric& d, Side side, std::size_t k) {
  return side == Side::Lower ? yoneda_q(d, k) : coyoneda_q(d, k);
}

ExtVector coordinates_as_distances(const ExtVector& x, const DirectedMetric& d, Side side) {
  if (!is_member(x, d, side)) throw InvalidInput("coordinates_as_distances: vector is not a member");
  ExtVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = funk(embed(d, side, i), x);
  if (!approx_equal(out, x)) throw VerificationError("coordinates_as_distances: D(Y(a_i), x) != x_i");
  return out;
}

MultVector coordinates_as_distances_exact(const MultVector& z, const DirectedMetric& d, Side side) {
  if (!is_member_exact(z, d, side)) throw InvalidInput("coordinates_as_distances: vector is not a member");
  MultVector out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = funk_exact(embed_q(d, side, i), z);
  if (out != z) throw VerificationError("coordinates_as_distances: D(Y(a_i), x) != x_i");
  return out;
}

ExtVector span_combine(const ExtVector& lambda, const DirectedMetric& d, Side side) {
  if (lambda.size() != d.size()) throw InvalidInput("span_combine: length mismatch");
  ExtVector out(d.size(), ExtReal::pos_inf());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) out[i] = tmin(out[i], tmul(entry(d, side, i, j), lambda[j]));
  return out;
}

MultVector span_combine_exact(const MultVector& lambda, const DirectedMetric& d, Side side) {
  if (lambda.size() != d.size()) throw InvalidInput("span_combine: length mismatch");
  MultVector out(d.size(), Mult::zero());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      out[i] = MaxTimes::add(out[i], MaxTimes::mul(entry_q(d, side, i, j), lambda[j]));
  return out;
}

ExtVector project(const ExtVector& x, const DirectedMetric& d, Side side) {
  require_vector(x, d.size(), true);
  return span_combine(x, d, side);
}

MultVector project_exact(const MultVector& z, const DirectedMetric& d, Side side) {
  require_vector(z, d.size());
  return span_combine_exact(z, d, side);
}

ExtVector span_decompose(const ExtVector& x, const DirectedMetric& d, Side side) {
  if (!is_member(x, d, side)) throw InvalidInput("span_decompose: vector is not a member");
  if (!approx_equal(span_combine(x, d, side), x)) throw VerificationError("span_decompose: reconstruction failed");
  return x;
}

MultVector span_decompose_exact(const MultVector& z, const DirectedMetric& d, Side side) {
  if (!is_member_exact(z, d, side)) throw InvalidInput("span_decompose: vector is not a member");
  if (span_combine_exact(z, d, side) != z) throw VerificationError("span_decompose: reconstruction failed");
  return z;
}

bool SaturationGraph::has_edge(std::size_t i, std::size_t j) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end();
}

std::vector<std::pair<std::size_t, std::size_t>> SaturationGraph::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : edges)
    if (e.first != e.second) out.push_back(e);
  return out;
}

namespace {

std::size_t count_components(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : edges) parent[find(i)] = find(j);
  std::vector<std::size_t> roots;
  for (auto v : vertices) roots.push_back(find(v));
  std::sort(roots.begin(), roots.end());
  return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

}  // namespace

std::size_t SaturationGraph::components_on_support() const { return count_components(n, arcs(), support); }

std::size_t SaturationGraph::components_total() const { return components_on_support() + (n - support.size()); }

std::vector<std::size_t> SaturationGraph::terminals() const {
  // reach[i][j]: j reachable from i along arcs.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [i, j] : arcs()) reach[i][j] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<std::size_t> out;
  for (auto i : support) {
    bool sink = true;
    bool least = true;
    for (auto j : support) {
      if (reach[i][j] && !reach[j][i]) sink = false;
      if (j < i && reach[i][j] && reach[j][i]) least = false;
    }
    if (sink && least) out.push_back(i);
  }
  return out;
}

SaturationGraph saturation_graph(const MultVector& z, const DirectedMetric& d, Side side) {
  if (!is_member_exact(z, d, side)) throw InvalidInput("saturation_graph: vector is not a member");
  SaturationGraph g;
  g.n = z.size();
  for (std::size_t i = 0; i < g.n; ++i)
    if (!z[i].is_zero()) g.support.push_back(i);
  for (std::size_t i = 0; i < g.n; ++i) g.edges.emplace_back(i, i);
  for (auto i : g.support)
    for (auto j : g.support) {
      if (i == j) continue;
      const Mult& p = entry_q(d, side, i, j);
      if (!p.is_zero() && z[i] == mul_zero_absorbing(p, z[j])) g.edges.emplace_back(i, j);
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

TerminalDecomposition terminal_decompose(const MultVector& z, const DirectedMetric& d, Side side) {
  const SaturationGraph g = saturation_graph(z, d, side);
  TerminalDecomposition out;
  out.face_dimension = g.components_on_support();
  out.components_total = g.components_total();
  MultVector rebuilt(z.size(), Mult::zero());
  for (auto b : g.terminals()) {
    const MultVector yb = embed_q(d, side, b);
    const Mult w = funk_exact(yb, z);
    out.terms.push_back({b, w, w.to_log()});
    for (std::size_t i = 0; i < z.size(); ++i) rebuilt[i] = MaxTimes::add(rebuilt[i], MaxTimes::mul(w, yb[i]));
  }
  if (rebuilt != z) throw VerificationError("terminal_decompose: reconstruction failed");
  return out;
}

QVector normalize_to_simplex(const QVector& z) {
  Rational sum = 0;
  for (const auto& q : z) {
    if (q < 0) throw InvalidInput("normalize_to_simplex: negative coordinate");
    sum += q;
  }
  if (sum == 0) throw InvalidInput("normalize_to_simplex: zero vector");
  QVector out;
  out.reserve(z.size());
  for (const auto& q : z) out.push_back(q / sum);
  return out;
}

QVector to_rational(const MultVector& z) {
  QVector out;
  out.reserve(z.size());
  for (const auto& m : z) out.push_back(m.rational());
  return out;
}

}  // namespace tropsem

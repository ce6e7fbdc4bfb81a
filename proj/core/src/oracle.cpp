#include "tropsem/oracle.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "tropsem/error.hpp"
#include "tropsem/exact_linalg.hpp"

namespace tropsem {

std::vector<RayConstraint> cone_constraints(const DirectedMetric& d, Side side) {
  std::vector<RayConstraint> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j) continue;
      const Mult& p = side == Side::Lower ? d.prob(i, j) : d.prob(j, i);
      if (p.is_zero()) continue;
      if (p.is_infinite()) throw InvalidInput("cone_constraints: -inf distance does not define a cone inequality");
      out.push_back({i, j, p.rational()});
    }
  return out;
}

QVector canonical_ray(const QVector& y) {
  Rational top = 0;
  for (const auto& v : y) {
    if (v < 0) throw InvalidInput("canonical_ray: negative coordinate");
    top = std::max(top, v);
  }
  if (top == 0) throw InvalidInput("canonical_ray: zero vector");
  QVector out;
  out.reserve(y.size());
  for (const auto& v : y) out.push_back(v / top);
  return out;
}

namespace {

// Row k < n is the facet y_k >= 0; row n + c is constraint c.
QVector row_of(std::size_t r, const std::vector<RayConstraint>& cs, std::size_t n) {
  QVector row(n, Rational(0));
  if (r < n) {
    row[r] = 1;
  } else {
    const auto& c = cs[r - n];
    row[c.i] += 1;
    row[c.j] -= c.q;
  }
  return row;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

void check_constraints(const std::vector<RayConstraint>& cs, std::size_t n) {
  for (const auto& c : cs) {
    if (c.i >= n || c.j >= n) throw InvalidInput("ray constraint index out of range");
    if (c.q <= 0) throw InvalidInput("ray constraint coefficient must be positive");
  }
}

std::vector<QVector> finish(std::vector<QVector> rays) {
  for (auto& r : rays) r = canonical_ray(r);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace

std::size_t certificate_rank(const QVector& y, const std::vector<RayConstraint>& constraints) {
  const std::size_t n = y.size();
  std::vector<QVector> tight;
  for (std::size_t r = 0; r < n + constraints.size(); ++r) {
    QVector row = row_of(r, constraints, n);
    if (dot(row, y) == 0) tight.push_back(std::move(row));
  }
  return rank(from_rows(tight, n));
}

std::vector<QVector> oracle_rays(const std::vector<RayConstraint>& constraints, std::size_t n, std::size_t max_n) {
  if (n > max_n) throw ResourceLimit("oracle_rays: dimension " + std::to_string(n) + " exceeds the bound");
  check_constraints(constraints, n);
  const std::size_t rows = n + constraints.size();

  struct Gen {
    QVector y;
    boost::dynamic_bitset<> zeros;  // tight rows among those processed
  };
  std::vector<Gen> gens;
  for (std::size_t k = 0; k < n; ++k) {
    Gen g{QVector(n, Rational(0)), boost::dynamic_bitset<>(rows)};
    g.y[k] = 1;
    for (std::size_t f = 0; f < n; ++f)
      if (f != k) g.zeros.set(f);
    gens.push_back(std::move(g));
  }

  for (std::size_t r = n; r < rows; ++r) {
    const QVector a = row_of(r, constraints, n);
    std::vector<Rational> s(gens.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Gen> next;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      s[g] = dot(a, gens[g].y);
      if (s[g] > 0) pos.push_back(g);
      if (s[g] < 0) neg.push_back(g);
      if (s[g] >= 0) {
        next.push_back(gens[g]);
        if (s[g] == 0) next.back().zeros.set(r);
      }
    }
    for (auto p : pos)
      for (auto m : neg) {
        const auto common = gens[p].zeros & gens[m].zeros;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t g = 0; g < gens.size() && adjacent; ++g) {
          if (g == p || g == m) continue;
          if (common.is_subset_of(gens[g].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Gen fresh{QVector(n), common};
        const Rational sp = s[p];
        const Rational sm = -s[m];
        for (std::size_t k = 0; k < n; ++k) fresh.y[k] = sp * gens[m].y[k] + sm * gens[p].y[k];
        fresh.y = canonical_ray(fresh.y);
        fresh.zeros.set(r);
        next.push_back(std::move(fresh));
      }
    gens = std::move(next);
  }

  std::vector<QVector> out;
  out.reserve(gens.size());
  for (auto& g : gens) out.push_back(std::move(g.y));
  return finish(std::move(out));
}

std::vector<QVector> brute_force_rays(const std::vector<RayConstraint>& constraints, std::size_t n,
                                      std::size_t max_n) {
  if (n > max_n) throw ResourceLimit("brute_force_rays: dimension " + std::to_string(n) + " exceeds the bound");
  check_constraints(constraints, n);
  const std::size_t rows = n + constraints.size();
  std::vector<QVector> all_rows;
  for (std::size_t r = 0; r < rows; ++r) all_rows.push_back(row_of(r, constraints, n));

  auto feasible = [&](const QVector& y) {
    return std::all_of(all_rows.begin(), all_rows.end(), [&](const QVector& row) { return dot(row, y) >= 0; });
  };

  std::vector<QVector> found;
  if (n == 1) {
    if (feasible(QVector{Rational(1)})) found.push_back(QVector{Rational(1)});
    return finish(std::move(found));
  }
  const std::size_t pick = n - 1;
  if (rows < pick) return found;
  std::vector<std::size_t> idx(pick);
  for (std::size_t k = 0; k < pick; ++k) idx[k] = k;
  while (true) {
    std::vector<QVector> chosen;
    for (auto k : idx) chosen.push_back(all_rows[k]);
    const auto basis = null_space(from_rows(chosen, n));
    if (basis.size() == 1) {
      for (int sign : {1, -1}) {
        QVector y = basis.front();
        if (sign < 0)
          for (auto& v : y) v = -v;
        if (std::all_of(y.begin(), y.end(), [](const Rational& v) { return v >= 0; }) && feasible(y)) {
          found.push_back(std::move(y));
          break;
        }
      }
    }
    // Next combination in lexicographic order.
    std::size_t k = pick;
    while (k > 0 && idx[k - 1] == rows - pick + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < pick; ++t) idx[t] = idx[t - 1] + 1;
  }
  return finish(std::move(found));
}

}  // namespace tropsem

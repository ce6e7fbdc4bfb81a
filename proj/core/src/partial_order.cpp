#include "tropsem/partial_order.hpp"

#include <algorithm>
#include <numeric>

#include "tropsem/error.hpp"

namespace tropsem {

PartialOrder::PartialOrder(std::size_t n) : n_(n), rel_(n * n, 0) {
  for (std::size_t i = 0; i < n; ++i) set(i, i);
}

PartialOrder PartialOrder::closure_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  PartialOrder p(n);
  for (const auto& [i, j] : pairs) {
    if (i >= n || j >= n) throw InvalidInput("order pair index out of range");
    p.set(i, j);
  }
  // Warshall.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq(k, j)) p.set(i, j);
  return p;
}

bool PartialOrder::is_reflexive() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!leq(i, i)) return false;
  return true;
}

bool PartialOrder::is_antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (leq(i, j) && leq(j, i)) return false;
  return true;
}

bool PartialOrder::is_transitive() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k)
      if (leq(i, k))
        for (std::size_t j = 0; j < n_; ++j)
          if (leq(k, j) && !leq(i, j)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> PartialOrder::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (!less(i, j)) continue;
      bool between = false;
      for (std::size_t k = 0; k < n_ && !between; ++k) between = less(i, k) && less(k, j);
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::size_t> PartialOrder::component_ids() const {
  // Comparability and Hasse edges give the same undirected components.
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (leq(i, j)) {
        const auto a = find(i);
        const auto b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::size_t> root_to_id(n_, n_);
  std::vector<std::size_t> ids(n_);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto r = find(i);
    if (root_to_id[r] == n_) root_to_id[r] = next++;
    ids[i] = root_to_id[r];
  }
  return ids;
}

std::vector<std::vector<std::size_t>> PartialOrder::components() const {
  const auto ids = component_ids();
  std::size_t count = 0;
  for (auto id : ids) count = std::max(count, id + 1);
  std::vector<std::vector<std::size_t>> out(count);
  for (std::size_t i = 0; i < n_; ++i) out[ids[i]].push_back(i);
  return out;
}

PartialOrder PartialOrder::opposite() const {
  PartialOrder p(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) p.set(i, j, leq(j, i));
  return p;
}

std::vector<std::size_t> PartialOrder::down(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (leq(i, k)) out.push_back(i);
  return out;
}

std::vector<std::size_t> PartialOrder::up(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (leq(k, j)) out.push_back(j);
  return out;
}

}  // namespace tropsem

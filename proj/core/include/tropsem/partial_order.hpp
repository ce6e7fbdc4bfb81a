#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace tropsem {

/// Finite reflexive relation with partial-order queries. The constructor does
/// not require the relation to be a partial order; use is_partial_order().
class PartialOrder {
 public:
  PartialOrder() = default;
  explicit PartialOrder(std::size_t n);

  /// Reflexive-transitive closure of the given pairs (i <= j).
  static PartialOrder closure_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return n_; }
  bool leq(std::size_t i, std::size_t j) const { return rel_[i * n_ + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
  void set(std::size_t i, std::size_t j, bool v = true) { rel_[i * n_ + j] = v ? 1 : 0; }

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

  /// Hasse edges (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Connected components of the undirected Hasse diagram, each sorted, listed
  /// by least member.
  std::vector<std::vector<std::size_t>> components() const;

  /// Component index of every element, matching components().
  std::vector<std::size_t> component_ids() const;

  PartialOrder opposite() const;

  /// Principal lower set (a_k)_l and upper set (a_k)^u.
  std::vector<std::size_t> down(std::size_t k) const;
  std::vector<std::size_t> up(std::size_t k) const;

  friend bool operator==(const PartialOrder& a, const PartialOrder& b) { return a.n_ == b.n_ && a.rel_ == b.rel_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> rel_;
};

}  // namespace tropsem

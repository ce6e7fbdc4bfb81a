#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropsem/error.hpp"

namespace tropsem {

/// Dense row-major matrix over a semiring carrier.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix square(std::size_t n, const T& fill) { return Matrix(n, n, fill); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, T{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_, {});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class S>
Matrix<typename S::value_type> identity(std::size_t n) {
  auto m = Matrix<typename S::value_type>::square(n, S::zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
  return m;
}

/// (m x)_i = sum_j m_ij * x_j in semiring S.
template <class S>
std::vector<typename S::value_type> apply(const Matrix<typename S::value_type>& m,
                                          const std::vector<typename S::value_type>& x) {
  if (m.cols() != x.size()) throw InvalidInput("apply: dimension mismatch");
  std::vector<typename S::value_type> out(m.rows(), S::zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto acc = S::zero();
    for (std::size_t j = 0; j < m.cols(); ++j) acc = S::add(acc, S::mul(m(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

template <class S>
Matrix<typename S::value_type> compose(const Matrix<typename S::value_type>& a,
                                       const Matrix<typename S::value_type>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("compose: dimension mismatch");
  Matrix<typename S::value_type> out(a.rows(), b.cols(), S::zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = S::add(out(i, j), S::mul(aik, b(k, j)));
    }
  return out;
}

template <class S>
bool equal(const Matrix<typename S::value_type>& a, const Matrix<typename S::value_type>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!S::equal(a(i, j), b(i, j))) return false;
  return true;
}

template <class S>
bool equal(const std::vector<typename S::value_type>& a, const std::vector<typename S::value_type>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!S::equal(a[i], b[i])) return false;
  return true;
}

/// m * m == m exactly.
template <class S>
bool is_projector(const Matrix<typename S::value_type>& m) {
  return m.is_square() && equal<S>(compose<S>(m, m), m);
}

/// Result of iterating powers until they stabilize.
template <class T>
struct PowerClosure {
  Matrix<T> matrix;
  std::size_t power = 1;  ///< least k with C^k == C^{k+1}
};

/// Powers C, C^2, ... until C^k == C^{k+1}. Returns nullopt if that does not
/// happen within max_power steps.
template <class S>
std::optional<PowerClosure<typename S::value_type>> stable_power(const Matrix<typename S::value_type>& c,
                                                                  std::size_t max_power) {
  if (!c.is_square()) throw InvalidInput("stable_power: matrix is not square");
  auto cur = c;
  for (std::size_t k = 1; k <= max_power; ++k) {
    auto next = compose<S>(cur, c);
    if (equal<S>(next, cur)) return PowerClosure<typename S::value_type>{std::move(cur), k};
    cur = std::move(next);
  }
  return std::nullopt;
}

}  // namespace tropsem

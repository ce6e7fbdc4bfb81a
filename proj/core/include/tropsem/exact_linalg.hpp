#pragma once

#include <cstddef>
#include <vector>

#include "tropsem/matrix.hpp"
#include "tropsem/mult.hpp"

namespace tropsem {

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix<Rational>& a);

std::size_t rank(Matrix<Rational> a);

/// Basis of {x : a x = 0}, one vector per free column.
std::vector<QVector> null_space(Matrix<Rational> a);

/// Stacks row vectors into a matrix with `cols` columns.
Matrix<Rational> from_rows(const std::vector<QVector>& rows, std::size_t cols);

}  // namespace tropsem

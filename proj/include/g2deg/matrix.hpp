// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <vector>

#include "g2deg/rational.hpp"

namespace g2deg {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

  /// Stacks `other` below this matrix (column counts must agree).
  RationalMatrix stacked(const RationalMatrix& other) const;
  RationalMatrix transposed() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Exact rank by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing each row's denominators.
std::size_t matrix_rank(const RationalMatrix& m);

/// Basis of the right null space, one vector per column of the result.
/// Columns are the standard RREF basis (free variable set to 1).
RationalMatrix nullspace(const RationalMatrix& m);

/// True iff the column spans of `a` and `b` coincide.
bool same_column_span(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace g2deg

// SPDX-License-Identifier: Apache-2.0
#include "g2deg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace g2deg {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& other) const {
  if (other.cols_ != cols_) throw std::invalid_argument("column count mismatch when stacking");
  RationalMatrix out(rows_ + other.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(other.entries_.begin(), other.entries_.end(), out.entries_.begin() + static_cast<long>(entries_.size()));
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

std::size_t matrix_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c).get_num() * (scale / m.at(r, c).get_den());
  }

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

RationalMatrix nullspace(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RationalMatrix r = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && r.at(p, col) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(r.at(p, j), r.at(row, j));
    const Rational inv = Rational(1) / r.at(row, col);
    for (std::size_t j = 0; j < cols; ++j) r.at(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || r.at(i, col) == 0) continue;
      const Rational f = r.at(i, col);
      for (std::size_t j = 0; j < cols; ++j) r.at(i, j) -= f * r.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix basis(cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) basis.at(pivot_cols[i], k) = -r.at(i, free_cols[k]);
  }
  return basis;
}

bool same_column_span(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const auto ra = matrix_rank(a.transposed());
  const auto rb = matrix_rank(b.transposed());
  if (ra != rb) return false;
  return matrix_rank(a.transposed().stacked(b.transposed())) == ra;
}

}  // namespace g2deg

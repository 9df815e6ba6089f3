#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "legsurg/algebra/rational.hpp"

namespace legsurg::algebra {

/// Dense row-major matrix over arbitrary-precision integers.
///
/// Zero-sized dimensions are allowed: a presentation with no relations is a
/// 0 x g matrix, and surgery on the empty link uses 0 x 0.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;

  bool is_symmetric() const;
  bool is_diagonal() const;

  IntegerMatrix transpose() const;
  // Fraction-free (Bareiss) elimination; square matrices only.
  Integer determinant() const;

  // Elementary operations, applied in place.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  // Appends a row; cols() must match unless the matrix has no rows yet.
  void append_row(const std::vector<Integer>& values);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace legsurg::algebra

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fermat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  IntVector row_vector(std::size_t i) const;
  IntVector column_vector(std::size_t j) const;

  void append_row(std::span<const Integer> values);
  void swap_rows(std::size_t a, std::size_t b);

  IntegerMatrix transpose() const;
  IntegerMatrix submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;
  /// Keeps the listed columns, in the listed order.
  IntegerMatrix select_columns(std::span<const std::size_t> columns) const;
  /// Keeps the listed rows, in the listed order.
  IntegerMatrix select_rows(std::span<const std::size_t> rows) const;
  /// Horizontal concatenation; row counts must agree.
  static IntegerMatrix hconcat(std::span<const IntegerMatrix> blocks);
  /// Vertical concatenation; column counts must agree.
  static IntegerMatrix vconcat(const IntegerMatrix& top, const IntegerMatrix& bottom);

  IntVector apply(std::span<const Integer> v) const;

  bool is_zero() const;
  bool is_diagonal() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

  std::vector<std::vector<long>> to_long_rows() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant via fraction-free elimination (Bareiss).
Integer determinant(const IntegerMatrix& m);

}  // namespace fermat

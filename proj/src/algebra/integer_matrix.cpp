#include "fermat/algebra/integer_matrix.hpp"

#include <sstream>

#include "fermat/error.hpp"

namespace fermat {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntegerMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

IntVector IntegerMatrix::column_vector(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void IntegerMatrix::append_row(std::span<const Integer> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "append_row");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::submatrix(std::size_t row0, std::size_t nrows, std::size_t col0,
                                       std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw Error(ErrorCode::DimensionMismatch, "submatrix");
  IntegerMatrix s(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) s(i, j) = (*this)(row0 + i, col0 + j);
  return s;
}

IntegerMatrix IntegerMatrix::select_columns(std::span<const std::size_t> columns) const {
  IntegerMatrix s(rows_, columns.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) s(i, j) = (*this)(i, columns[j]);
  return s;
}

IntegerMatrix IntegerMatrix::select_rows(std::span<const std::size_t> rows) const {
  IntegerMatrix s(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(rows[i], j);
  return s;
}

IntegerMatrix IntegerMatrix::hconcat(std::span<const IntegerMatrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorCode::DimensionMismatch, "hconcat");
    cols += b.cols();
  }
  IntegerMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, offset + j) = b(i, j);
    offset += b.cols();
  }
  return out;
}

IntegerMatrix IntegerMatrix::vconcat(const IntegerMatrix& top, const IntegerMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "vconcat");
  IntegerMatrix out = top;
  out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
  out.rows_ += bottom.rows_;
  return out;
}

IntVector IntegerMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "apply");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0) acc += (*this)(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

std::vector<std::vector<long>> IntegerMatrix::to_long_rows() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).get_si();
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace fermat

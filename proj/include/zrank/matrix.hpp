#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "zrank/error.hpp"
#include "zrank/polynomial.hpp"
#include "zrank/rational.hpp"

namespace zrank {

/// Dense row-major matrix. Indices are 0-based.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvariantError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// The submatrix with row `skip_row` and column `skip_col` removed.
  Matrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == skip_col) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  /// The submatrix on the given (ordered) row and column index lists.
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<RatPoly>;

/// Fraction-free (Bareiss) determinant over the integers. 0x0 gives 1.
Integer det_bareiss(Matrix<Integer> m);

/// Bareiss on machine integers with 128-bit intermediates. Returns nullopt
/// if a quotient leaves the int64 range; callers fall back to det_bareiss.
std::optional<std::int64_t> det_bareiss_i64(Matrix<std::int64_t> m);

/// Exact determinant of a rational matrix: each row is scaled to integers,
/// the integer determinant is taken fraction-free, and the scale divided out.
Rational det_exact(const RationalMatrix& m);

/// (-1)^(i+j) times the minor at (i, j).
Rational cofactor(const RationalMatrix& m, std::size_t i, std::size_t j);

/// Determinant of a matrix over Q[t]: cofactor expansion below order 6,
/// fraction-free elimination with exact polynomial division from order 6 on.
RatPoly det_poly(const PolyMatrix& m);
RatPoly det_poly_cofactor(const PolyMatrix& m);
RatPoly det_poly_bareiss(PolyMatrix m);

std::string to_string(const RationalMatrix& m);

}  // namespace zrank

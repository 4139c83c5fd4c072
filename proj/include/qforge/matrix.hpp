#pragma once

#include <optional>
#include <vector>

#include "qforge/scalar.hpp"

namespace qforge {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);

// Dense exact matrix for the small systems (Clifford conditions, Gram
// matrices, algebra maps).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  // Reduced row echelon form (pivot = first nonzero column of each row);
  // returns the pivot columns.
  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;
  // Basis of {x : A x = 0}, one vector per free column.
  std::vector<Vec> nullspace() const;
  // Some solution of A x = b, if any.
  std::optional<Vec> solve(const Vec& b) const;
  std::optional<Matrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Echelonized row space of a list of vectors (pivot = first nonzero entry);
// canonical, so equality of results is equality of spans.
std::vector<Vec> row_space(const std::vector<Vec>& vectors, std::size_t dim);

}  // namespace qforge

#include "qforge/matrix.hpp"

#include "qforge/error.hpp"

namespace qforge {

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) fail(ErrorCode::DimensionMismatch, "ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) out(i, j).add_product(a, o(k, j));
    }
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i].add_product((*this)(i, k), v[k]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::size_t> Matrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    Scalar inv = (*this)(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      Scalar f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!(*this)(r, j).is_zero()) (*this)(i, j).sub_product(f, (*this)(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref_in_place().size();
}

std::vector<Vec> Matrix::nullspace() const {
  Matrix m = *this;
  auto pivots = m.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_);
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) fail(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto pivots = aug.rref_in_place();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vec> row_space(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(vectors, dim);
  auto pivots = m.rref_in_place();
  std::vector<Vec> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace qforge

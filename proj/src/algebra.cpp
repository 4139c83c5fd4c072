#include "qforge/algebra.hpp"

#include "qforge/error.hpp"
#include "qforge/tensor.hpp"

namespace qforge {

FiniteAlgebra::FiniteAlgebra(Field field, std::vector<std::string> labels, std::vector<int> parity,
                             std::vector<SparseCoords> table, Vec unit)
    : field_(field),
      labels_(std::move(labels)),
      parity_(std::move(parity)),
      table_(std::move(table)),
      unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (parity_.size() != n || table_.size() != n * n || unit_.size() != n)
    fail(ErrorCode::DimensionMismatch, "inconsistent finite algebra data");
}

void FiniteAlgebra::set_degrees(std::vector<std::size_t> degrees) {
  if (degrees.size() != dim()) fail(ErrorCode::DimensionMismatch, "degree list length mismatch");
  degrees_ = std::move(degrees);
}

Vec FiniteAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v.at(i) = Scalar(1);
  return v;
}

Vec FiniteAlgebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) fail(ErrorCode::DimensionMismatch, "element length mismatch");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k].add_product(ab, c);
    }
  }
  return out;
}

Matrix FiniteAlgebra::left_matrix(const Vec& a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis_vector(j)));
  return Matrix::from_columns(cols, dim());
}

Matrix FiniteAlgebra::right_matrix(const Vec& a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis_vector(j), a));
  return Matrix::from_columns(cols, dim());
}

bool FiniteAlgebra::is_associative() const {
  const std::size_t n = dim();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(basis_vector(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = multiply(basis[i], basis[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (multiply(ij, basis[k]) != multiply(basis[i], multiply(basis[j], basis[k]))) return false;
    }
  return true;
}

bool FiniteAlgebra::is_unital() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec b = basis_vector(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b) return false;
  }
  return true;
}

bool FiniteAlgebra::is_parity_homogeneous() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& entry : product(i, j))
        if (parity_[entry.first] != (parity_[i] + parity_[j]) % 2) return false;
  return true;
}

std::optional<int> FiniteAlgebra::parity_of(const Vec& v) const {
  std::optional<int> p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (p && *p != parity_[i]) return std::nullopt;
    p = parity_[i];
  }
  return p ? p : 0;
}

std::string FiniteAlgebra::format_element(const Vec& v) const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Scalar& c = v[i];
    bool negative = sgn(c.real()) < 0 || (sgn(c.real()) == 0 && sgn(c.imag()) < 0);
    Scalar mag = negative ? -c : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (mag.is_one()) {
      out += labels_[i];
    } else if (labels_[i] == "1") {
      out += mag.to_string();
    } else {
      out += mag.to_string() + "*" + labels_[i];
    }
  }
  return first ? "0" : out;
}

IsoCertificate check_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target, const Matrix& map) {
  if (map.rows() != target.dim() || map.cols() != source.dim())
    fail(ErrorCode::DimensionMismatch, "map shape does not match the algebras");
  IsoCertificate cert;
  cert.map = map;
  cert.unital = map.apply(source.unit()) == target.unit();
  cert.multiplicative = true;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(map.column(i));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      ++cert.pairs_checked;
      Vec lhs = map.apply(source.multiply(source.basis_vector(i), source.basis_vector(j)));
      if (lhs != target.multiply(images[i], images[j])) cert.multiplicative = false;
    }
  cert.bijective = source.dim() == target.dim() && map.rank() == source.dim();
  return cert;
}

std::size_t rank_of(const std::vector<Vec>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return Matrix::from_rows(vs, dim).rank();
}

}  // namespace qforge

#include "ldend/tensor.hpp"

#include "ldend/error.hpp"

namespace ldend {

Tensor2::Tensor2(std::size_t dim) : dim_(dim), data_(dim * dim, Scalar(0)) {}

Tensor2 Tensor2::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Tensor2 t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("Tensor2::from_rows: not square");
    for (std::size_t j = 0; j < rows.size(); ++j) t(i, j) = rows[i][j];
  }
  return t;
}

bool Tensor2::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Tensor2::is_skew() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool Tensor2::is_zero() const {
  for (const auto& x : data_)
    if (!ldend::is_zero(x)) return false;
  return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& other) {
  if (dim_ != other.dim_) throw DimensionError("tensor sum: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& other) {
  if (dim_ != other.dim_) throw DimensionError("tensor difference: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
Tensor2 operator*(const Scalar& k, Tensor2 a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) a(i, j) *= k;
  return a;
}

Tensor3::Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim, Scalar(0)) {}

bool Tensor3::is_zero() const { return nonzero_count() == 0; }

std::size_t Tensor3::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (!ldend::is_zero(x)) ++n;
  return n;
}

std::optional<Tensor3::Entry> Tensor3::first_nonzero() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!ldend::is_zero((*this)(i, j, k))) return Entry{i, j, k, (*this)(i, j, k)};
  return std::nullopt;
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  if (dim_ != other.dim_) throw DimensionError("tensor sum: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  if (dim_ != other.dim_) throw DimensionError("tensor difference: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
Tensor3 operator*(const Scalar& k, Tensor3 a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t l = 0; l < a.dim(); ++l) a(i, j, l) *= k;
  return a;
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.square()) throw DimensionError("Gram matrix must be square");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  const Vector gy = gram_.apply(y);
  if (x.size() != gy.size()) throw DimensionError("bilinear form: operand length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!ldend::is_zero(x[i])) s += x[i] * gy[i];
  return s;
}

bool BilinearForm::is_symmetric() const { return gram_ == gram_.transpose(); }
bool BilinearForm::is_skew() const { return gram_ == -gram_.transpose(); }
bool BilinearForm::is_nondegenerate() const { return !ldend::is_zero(gram_.determinant()); }

}  // namespace ldend

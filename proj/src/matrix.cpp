#include "ldend/matrix.hpp"

#include <string>
#include <utility>

#include "ldend/error.hpp"

namespace ldend {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw DimensionError("Matrix: entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw DimensionError("Matrix::apply: vector length " + std::to_string(x.size()) +
                                              " != " + std::to_string(cols_) + " columns");
  Vector y = zero_vector(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (ldend::is_zero(x[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!ldend::is_zero(a)) y[i] += a * x[j];
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!ldend::is_zero(x)) return false;
  return true;
}

namespace {

// Row-reduces `a` in place (and mirrors row operations on `b` when given).
// Returns the rank and the determinant of the leading square block.
std::pair<std::size_t, Scalar> eliminate(Matrix& a, Matrix* b) {
  Scalar det = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && ldend::is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(rank, j));
      if (b)
        for (std::size_t j = 0; j < b->cols(); ++j) std::swap((*b)(pivot, j), (*b)(rank, j));
      det = -det;
    }
    const Scalar p = a(rank, col);
    det *= p;
    for (std::size_t j = 0; j < a.cols(); ++j) a(rank, j) /= p;
    if (b)
      for (std::size_t j = 0; j < b->cols(); ++j) (*b)(rank, j) /= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || ldend::is_zero(a(i, col))) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
      if (b)
        for (std::size_t j = 0; j < b->cols(); ++j) (*b)(i, j) -= f * (*b)(rank, j);
    }
    ++rank;
  }
  if (rank < a.rows() || rank < a.cols()) det = 0;
  return {rank, det};
}

}  // namespace

Scalar Matrix::determinant() const {
  if (!square()) throw DimensionError("determinant of a non-square matrix");
  Matrix a = *this;
  return eliminate(a, nullptr).second;
}

std::size_t Matrix::rank() const {
  Matrix a = *this;
  return eliminate(a, nullptr).first;
}

Matrix Matrix::inverse() const {
  if (!square()) throw SingularMatrix("inverse of a non-square " + std::to_string(rows_) + "x" +
                                      std::to_string(cols_) + " matrix");
  Matrix a = *this;
  Matrix b = identity(rows_);
  if (eliminate(a, &b).first != rows_) throw SingularMatrix("matrix is singular");
  return b;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(const Matrix& a) { return Scalar(-1) * a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (ldend::is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!ldend::is_zero(b(k, j))) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator*(const Scalar& k, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= k;
  return c;
}

Matrix evaluate(const MatrixFamily& family, const Vector& coeffs) {
  if (family.size() != coeffs.size()) throw DimensionError("family evaluated at a vector of the wrong length");
  if (family.empty()) return {};
  Matrix out(family.front().rows(), family.front().cols());
  for (std::size_t k = 0; k < family.size(); ++k)
    if (!ldend::is_zero(coeffs[k])) out += coeffs[k] * family[k];
  return out;
}

void require_family_shape(const MatrixFamily& family, std::size_t count, std::size_t vdim, const char* what) {
  if (family.size() != count)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(count) + " matrices, got " +
                         std::to_string(family.size()));
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family[i].rows() != vdim || family[i].cols() != vdim)
      throw DimensionError(std::string(what) + "[" + std::to_string(i + 1) + "]: expected " +
                           std::to_string(vdim) + "x" + std::to_string(vdim) + " matrix");
}

namespace {

template <typename F>
MatrixFamily zip(const MatrixFamily& a, const MatrixFamily& b, F f) {
  if (a.size() != b.size()) throw DimensionError("family lengths differ");
  MatrixFamily out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a[i], b[i]));
  return out;
}

}  // namespace

MatrixFamily operator+(const MatrixFamily& a, const MatrixFamily& b) {
  return zip(a, b, [](const Matrix& x, const Matrix& y) { return x + y; });
}

MatrixFamily operator-(const MatrixFamily& a, const MatrixFamily& b) {
  return zip(a, b, [](const Matrix& x, const Matrix& y) { return x - y; });
}

MatrixFamily operator-(const MatrixFamily& a) {
  MatrixFamily out;
  out.reserve(a.size());
  for (const auto& m : a) out.push_back(-m);
  return out;
}

}  // namespace ldend

#pragma once

#include <cstddef>
#include <vector>

#include "ldend/scalar.hpp"

namespace ldend {

/// Dense exact matrix. Column j is the image of the j-th source basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major);

  static Matrix identity(std::size_t n);
  /// Rows given as nested lists, e.g. from_rows({{0, 1}, {1, 0}}).
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector apply(const Vector& x) const;

  Matrix transpose() const;
  bool is_zero() const;

  Scalar determinant() const;
  std::size_t rank() const;
  /// Exact Gauss-Jordan inverse. Throws SingularMatrix.
  Matrix inverse() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Linear maps between based spaces are stored as their matrices.
using LinearMap = Matrix;

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& k, const Matrix& a);

/// A family of square matrices indexed by a basis of some algebra:
/// the extensional form of a linear map A -> gl(V).
using MatrixFamily = std::vector<Matrix>;

/// Sum_k coeffs[k] * family[k]; the family evaluated at a vector of A.
Matrix evaluate(const MatrixFamily& family, const Vector& coeffs);

/// Throws DimensionError unless every member is vdim x vdim and there are
/// `count` members.
void require_family_shape(const MatrixFamily& family, std::size_t count, std::size_t vdim,
                          const char* what);

MatrixFamily operator+(const MatrixFamily& a, const MatrixFamily& b);
MatrixFamily operator-(const MatrixFamily& a, const MatrixFamily& b);
MatrixFamily operator-(const MatrixFamily& a);

}  // namespace ldend

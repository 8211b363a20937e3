#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ldend/matrix.hpp"
#include "ldend/scalar.hpp"

namespace ldend {

/// Element of A (x) A; (i, j) is the coefficient of e_i (x) e_j.
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(std::size_t dim);
  static Tensor2 from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  bool is_symmetric() const;
  bool is_skew() const;
  bool is_zero() const;

  friend bool operator==(const Tensor2&, const Tensor2&) = default;
  Tensor2& operator+=(const Tensor2& other);
  Tensor2& operator-=(const Tensor2& other);

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

Tensor2 operator+(Tensor2 a, const Tensor2& b);
Tensor2 operator-(Tensor2 a, const Tensor2& b);
Tensor2 operator*(const Scalar& k, Tensor2 a);

/// Element of A (x) A (x) A.
class Tensor3 {
 public:
  struct Entry {
    std::size_t i, j, k;
    Scalar value;
  };

  Tensor3() = default;
  explicit Tensor3(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  bool is_zero() const;
  std::size_t nonzero_count() const;
  /// First nonzero entry in lexicographic index order.
  std::optional<Entry> first_nonzero() const;

  friend bool operator==(const Tensor3&, const Tensor3&) = default;
  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

Tensor3 operator+(Tensor3 a, const Tensor3& b);
Tensor3 operator-(Tensor3 a, const Tensor3& b);
Tensor3 operator*(const Scalar& k, Tensor3 a);

/// B(e_i, e_j) = gram(i, j).
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  Scalar operator()(const Vector& x, const Vector& y) const;

  bool is_symmetric() const;
  bool is_skew() const;
  bool is_nondegenerate() const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
};

}  // namespace ldend

#include "ldend/core.hpp"

#include <string>

#include "ldend/error.hpp"
#include "ldend/kernels.hpp"

namespace ldend {

Vector multiply(const Algebra& alg, Op op, const Vector& x, const Vector& y) {
  const auto& table = alg.table(op);
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw DimensionError("multiply: operands must have length " + std::to_string(alg.dim()));
  return table.product(x, y);
}

Tensor3 slot_product(const Tensor2& r, SlotPair r_slots, const Tensor2& s, SlotPair s_slots,
                     const StructureConstants& table) {
  return kernels::slot_product_parallel(r, r_slots, s, s_slots, table);
}

Tensor3 slot_product(const Tensor2& r, SlotPair r_slots, const Tensor2& s, SlotPair s_slots, const Algebra& alg,
                     Op op) {
  return slot_product(r, r_slots, s, s_slots, alg.table(op));
}

Tensor2 exchange(const Tensor2& r) {
  Tensor2 t(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) t(j, i) = r(i, j);
  return t;
}

LinearMap tensor_to_map(const Tensor2& r) {
  // Column i holds F_r(e_i*) = sum_k r(i, k) e_k.
  LinearMap m(r.dim(), r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t k = 0; k < r.dim(); ++k) m(k, i) = r(i, k);
  return m;
}

BilinearForm form_from_invertible_map(const LinearMap& t) {
  // gram(i, j) = <T^{-1} e_i, e_j> = (T^{-1})(j, i)
  return BilinearForm(t.inverse().transpose());
}

LinearMap map_from_form(const BilinearForm& form) { return form.gram().transpose().inverse(); }

MatrixFamily dual_rep(const MatrixFamily& rho) {
  MatrixFamily out;
  out.reserve(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const auto& m = rho[i];
    if (!m.square() || m.rows() != rho.front().rows())
      throw DimensionError("dual_rep: member " + std::to_string(i + 1) + " is not square of the common size");
    out.push_back(-m.transpose());
  }
  return out;
}

MatrixFamily left_multiplications(const StructureConstants& table) {
  const std::size_t n = table.dim();
  MatrixFamily out(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i](k, j) = table.at(i, j, k);
  return out;
}

MatrixFamily right_multiplications(const StructureConstants& table) {
  const std::size_t n = table.dim();
  MatrixFamily out(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i](k, j) = table.at(j, i, k);
  return out;
}

Tensor2 tensor_from_matrix(const Matrix& m) {
  if (!m.square()) throw DimensionError("tensor_from_matrix: matrix is not square");
  Tensor2 t(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
  return t;
}

}  // namespace ldend

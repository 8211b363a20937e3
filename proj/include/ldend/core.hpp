#pragma once

// Tensor and linear-map machinery shared by every other module.

#include "ldend/algebra.hpp"
#include "ldend/matrix.hpp"
#include "ldend/tensor.hpp"

namespace ldend {

/// Positions (1-based, increasing) that a two-tensor occupies inside a
/// three-fold tensor product: r12, r13 or r23.
struct SlotPair {
  int first;
  int second;
  friend bool operator==(const SlotPair&, const SlotPair&) = default;
};

inline constexpr SlotPair k12{1, 2};
inline constexpr SlotPair k13{1, 3};
inline constexpr SlotPair k23{2, 3};

/// x . y under the named table. Throws MissingOperation / DimensionError.
Vector multiply(const Algebra& alg, Op op, const Vector& x, const Vector& y);

/// r_{ab} . s_{cd}: the slot shared by both pairs receives
/// (component of r) . (component of s) under `table`; the other two slots
/// carry the remaining components. E.g. slot_product(r, k23, r, k12, c) is
/// sum a_j (x) (a_i . b_j) (x) b_i.
/// Throws DimensionError if the pairs do not share exactly one slot.
Tensor3 slot_product(const Tensor2& r, SlotPair r_slots, const Tensor2& s, SlotPair s_slots,
                     const StructureConstants& table);
Tensor3 slot_product(const Tensor2& r, SlotPair r_slots, const Tensor2& s, SlotPair s_slots,
                     const Algebra& alg, Op op);

/// sigma(x (x) y) = y (x) x.
Tensor2 exchange(const Tensor2& r);

/// The map F_r : A* -> A with F_r(e_i*) = sum_k r(i, k) e_k.
LinearMap tensor_to_map(const Tensor2& r);

/// B(u, v) = <T^{-1} u, v> for invertible T : V* -> V. Throws SingularMatrix.
BilinearForm form_from_invertible_map(const LinearMap& t);
/// Inverse of form_from_invertible_map for nondegenerate B.
LinearMap map_from_form(const BilinearForm& form);

/// rho*(e_i) = -rho(e_i)^T. Throws DimensionError on ragged families.
MatrixFamily dual_rep(const MatrixFamily& rho);

/// Left multiplications L(e_i) y = e_i . y.
MatrixFamily left_multiplications(const StructureConstants& table);
/// Right multiplications R(e_i) y = y . e_i.
MatrixFamily right_multiplications(const StructureConstants& table);

/// Tensor2 with the entry array of a square matrix (used for embeddings).
Tensor2 tensor_from_matrix(const Matrix& m);

}  // namespace ldend

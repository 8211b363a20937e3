#pragma once

#include <cstddef>

#include "ldend/algebra.hpp"
#include "ldend/matrix.hpp"
#include "ldend/report.hpp"

namespace ldend {

/// (l, r, V) over a pre-Lie algebra; base.table(circ) is the product.
struct PreLieModule {
  Algebra base;
  std::size_t vdim = 0;
  MatrixFamily l;
  MatrixFamily r;

  friend bool operator==(const PreLieModule&, const PreLieModule&) = default;
};

/// (l_r, r_r, l_l, r_l, V) over an L-dendriform algebra: the actions
/// belonging to the right triangle (l_r, r_r) and left triangle (l_l, r_l).
struct LDendModule {
  Algebra base;
  std::size_t vdim = 0;
  MatrixFamily l_r;
  MatrixFamily r_r;
  MatrixFamily l_l;
  MatrixFamily r_l;

  friend bool operator==(const LDendModule&, const LDendModule&) = default;
};

/// A representation of a Lie algebra (base.table(bracket)).
struct LieModule {
  Algebra base;
  std::size_t vdim = 0;
  MatrixFamily rho;

  friend bool operator==(const LieModule&, const LieModule&) = default;
};

/// Throw DimensionError when family lengths or matrix sizes are off.
void validate(const PreLieModule& m);
void validate(const LDendModule& m);
void validate(const LieModule& m);

/// (L, R, A) with L, R the multiplication operators of circ.
PreLieModule regular_prelie_module(const Algebra& alg);
/// (L>, R>, L<, R<, A).
LDendModule regular_ldend_module(const Algebra& alg);
/// (ad, g).
LieModule adjoint_module(const Algebra& lie);

/// (L>, R<, A) over the horizontal pre-Lie algebra.
PreLieModule horizontal_module(const Algebra& ldend);
/// (L>, -L<, A) over the vertical pre-Lie algebra.
PreLieModule vertical_module(const Algebra& ldend);

CheckReport check_prelie_module(const PreLieModule& m);
/// (l* - r*, -r*, V*).
PreLieModule dual_prelie_module(const PreLieModule& m);
/// A + V with (x+u)(y+v) = xy + l(x)v + r(y)u; base coordinates first.
Algebra semidirect_prelie(const PreLieModule& m);

/// Evaluated with o (vertical), . (horizontal) and their common commutator.
CheckReport check_ldend_module(const LDendModule& m);
/// (l_r* + l_l* - r_r* - r_l*, r_r*, r_r* - l_l*, -(r_r* + r_l*), V*).
LDendModule dual_ldend_module(const LDendModule& m);
Algebra semidirect_ldend(const LDendModule& m);

}  // namespace ldend

#pragma once

#include <string_view>
#include <vector>

#include "ldend/algebra.hpp"
#include "ldend/kernels.hpp"
#include "ldend/report.hpp"
#include "ldend/tensor.hpp"

namespace ldend {

enum class AlgebraClass { pre_lie, lie, associative, dendriform, l_dendriform, quadri };

std::string_view class_name(AlgebraClass c);
/// Throws FormatError.
AlgebraClass parse_class(std::string_view name);

/// The defining identities of `c`, instantiated on the tables of `alg`.
/// Throws MissingOperation when a required table is absent.
std::vector<kernels::Identity> class_identities(const Algebra& alg, AlgebraClass c);

/// Exhaustive check on basis tuples. Required tables:
///   pre_lie, associative: circ     lie: bracket
///   dendriform: succ, prec (or vee, wedge when neither of those is present)
///   l_dendriform: tri_r, tri_l
///   quadri: se, ne, nw, sw (derived products are computed here)
CheckReport check_class(const Algebra& alg, AlgebraClass c);

/// Symmetric-in-(x, y) condition on B over the circ product.
CheckReport check_prelie_cocycle(const Algebra& alg, const BilinearForm& form);

/// Skew-symmetry of B plus the triangle-left form identity.
CheckReport check_ldend_cocycle(const Algebra& alg, const BilinearForm& form);

/// B(x < y, z) = -B(y, z o x) + B(x, z . y) on an L-dendriform algebra
/// (o vertical, . horizontal).
CheckReport check_form_left_identity(const Algebra& alg, const BilinearForm& form);
/// B(x > y, z) = -B(y, [x, z]) - B(x, z > y).
CheckReport check_form_right_identity(const Algebra& alg, const BilinearForm& form);

}  // namespace ldend

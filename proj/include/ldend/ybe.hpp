#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ldend/algebra.hpp"
#include "ldend/core.hpp"
#include "ldend/report.hpp"
#include "ldend/representations.hpp"
#include "ldend/tensor.hpp"

namespace ldend {

/// Tensor equations in r. The S-family lives in a pre-Lie algebra (circ);
/// the LD-family in an L-dendriform algebra (tri_r, tri_l), where o, . and
/// [,] are the vertical, horizontal and commutator products.
enum class Equation {
  s_equation,            // -r12 o r13 + r12 o r23 + [r13, r23]
  s_equation_alternate,  // r13 o r23 + [r12, r23] - r13 o r12
  ld_equation,           // r13 o r23 + r12 . r23 - r12 < r13
  ld_aux_right,          // r13 > r23 + [r12, r23] - r13 > r12
  ld_aux_left,           // r23 < r13 - r13 o r12 - r23 . r12
  ld_perm_1,             // r23 o r13 - r12 . r13 + r12 < r23
  ld_perm_2,             // r23 o r12 + r13 . r12 + r13 < r23
  ld_perm_3,             // r12 o r23 + r13 . r23 + r13 < r12
  ld_perm_4,             // r12 o r13 - r23 . r13 + r23 < r12
};

inline constexpr Equation kLdEquations[] = {Equation::ld_equation, Equation::ld_aux_right,
                                              Equation::ld_aux_left, Equation::ld_perm_1,
                                              Equation::ld_perm_2,   Equation::ld_perm_3,
                                              Equation::ld_perm_4};

/// Stable report ids: eq-2.9, eq-2.9-alt, eq-4.8 ... eq-4.14.
std::string_view equation_id(Equation eq);
/// Throws FormatError.
Equation parse_equation(std::string_view id);
bool is_s_family(Equation eq);

/// One summand sign * (r_left . r_right) of an equation's left-hand side.
struct Term {
  int sign;
  SlotPair left;
  SlotPair right;
  Op product;  // circ, bullet, tri_r, tri_l or bracket
};

std::vector<Term> equation_terms(Equation eq);

/// Tables the terms of `eq` refer to, recomputed from alg's own tables
/// (never from its class tag).
std::map<Op, StructureConstants> equation_tables(const Algebra& alg, Equation eq);

/// Exact left-hand side of `eq` at r. Throws DimensionError / MissingOperation.
Tensor3 residual(const Algebra& alg, const Tensor2& r, Equation eq);
Tensor3 s_residual(const Algebra& alg, const Tensor2& r);
Tensor3 ld_residual(const Algebra& alg, const Tensor2& r, Equation variant = Equation::ld_equation);

struct SEquivalence {
  Tensor3 s_residual;
  Tensor3 alternate_residual;
  /// r as an O-operator of (A, o) for (L* - R*, -R*, A*).
  CheckReport operator_report;

  bool all_vanish() const;
  bool none_vanish() const;
  /// The three conditions agree.
  bool consistent() const { return all_vanish() || none_vanish(); }
};

/// Throws DimensionError unless r is symmetric.
SEquivalence s_equivalence_check(const Algebra& alg, const Tensor2& r);

struct LDEquivalence {
  Tensor3 ld_residual;
  /// r as an O-operator of the L-dendriform algebra for the dual of its
  /// regular module.
  CheckReport ldend_operator_report;
  /// r as an O-operator of (A, o) for (L>* + L<*, L<*, A*).
  CheckReport vertical_operator_report;
  /// r as an O-operator of (A, .) for (L>* - R<*, -R<*, A*).
  CheckReport horizontal_operator_report;
  Tensor3 aux_right_residual;
  Tensor3 aux_left_residual;

  bool all_vanish() const;
  bool none_vanish() const;
  bool consistent() const { return all_vanish() || none_vanish(); }
  /// aux-left vanishing implies aux-right vanishing on this r.
  bool aux_implication_holds() const;
};

/// Throws DimensionError unless r is skew-symmetric.
LDEquivalence ld_equivalence_check(const Algebra& alg, const Tensor2& r);

struct Solution {
  Algebra algebra;
  Tensor2 r;
};

/// T : V -> A embedded as sum_i T(v_i) (x) v_i* in the upper-right block of
/// (A + V*) (x) (A + V*).
Tensor2 embed_operator(const LinearMap& t);

/// (A semidirect V* via the dual module, T + sigma(T)).
Solution build_s_solution(const PreLieModule& m, const LinearMap& t);
/// (A semidirect V* via the dual L-dendriform module, T - sigma(T)).
Solution build_ld_solution(const LDendModule& m, const LinearMap& t);

struct DoubleSolution {
  /// (A, o) semidirect A* via (L>* + L<*, L<*).
  Algebra vertical_double;
  /// (A, .) semidirect A* via (L>* - R<*, -R<*).
  Algebra horizontal_double;
  /// sum_i e_i (x) e_i* + e_i* (x) e_i.
  Tensor2 r;
};

DoubleSolution canonical_double_solution(const Algebra& ldend);

struct FormCriterion {
  BilinearForm form;
  bool ld_solution = false;
  bool left_identity = false;   // B(x < y, z) = -B(y, z o x) + B(x, z . y)
  bool right_identity = false;  // B(x > y, z) = -B(y, [x, z]) - B(x, z > y)
};

/// Throws DimensionError unless r is skew; SingularMatrix unless invertible.
FormCriterion form_criterion_check(const Algebra& ldend, const Tensor2& r);

}  // namespace ldend

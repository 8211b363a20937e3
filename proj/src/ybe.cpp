#include "ldend/ybe.hpp"

#include <string>

#include "ldend/axioms.hpp"
#include "ldend/error.hpp"
#include "ldend/functors.hpp"
#include "ldend/operators.hpp"

namespace ldend {

namespace {

struct EquationInfo {
  Equation eq;
  std::string_view id;
};

constexpr EquationInfo kEquations[] = {
    {Equation::s_equation, "eq-2.9"}, {Equation::s_equation_alternate, "eq-2.9-alt"},
    {Equation::ld_equation, "eq-4.8"}, {Equation::ld_aux_right, "eq-4.9"},
    {Equation::ld_aux_left, "eq-4.10"}, {Equation::ld_perm_1, "eq-4.11"},
    {Equation::ld_perm_2, "eq-4.12"}, {Equation::ld_perm_3, "eq-4.13"},
    {Equation::ld_perm_4, "eq-4.14"},
};

void require_dim(const Algebra& alg, const Tensor2& r) {
  if (alg.dim() != r.dim())
    throw DimensionError("tensor has dimension " + std::to_string(r.dim()) + ", algebra has " +
                         std::to_string(alg.dim()));
}

}  // namespace

std::string_view equation_id(Equation eq) {
  for (const auto& info : kEquations)
    if (info.eq == eq) return info.id;
  return "?";
}

Equation parse_equation(std::string_view id) {
  for (const auto& info : kEquations)
    if (info.id == id) return info.eq;
  throw FormatError("--equation", "unknown equation \"" + std::string(id) + "\"");
}

bool is_s_family(Equation eq) { return eq == Equation::s_equation || eq == Equation::s_equation_alternate; }

std::vector<Term> equation_terms(Equation eq) {
  switch (eq) {
    case Equation::s_equation:
      return {{-1, k12, k13, Op::circ}, {1, k12, k23, Op::circ}, {1, k13, k23, Op::bracket}};
    case Equation::s_equation_alternate:
      return {{1, k13, k23, Op::circ}, {1, k12, k23, Op::bracket}, {-1, k13, k12, Op::circ}};
    case Equation::ld_equation:
      return {{1, k13, k23, Op::circ}, {1, k12, k23, Op::bullet}, {-1, k12, k13, Op::tri_l}};
    case Equation::ld_aux_right:
      return {{1, k13, k23, Op::tri_r}, {1, k12, k23, Op::bracket}, {-1, k13, k12, Op::tri_r}};
    case Equation::ld_aux_left:
      return {{1, k23, k13, Op::tri_l}, {-1, k13, k12, Op::circ}, {-1, k23, k12, Op::bullet}};
    case Equation::ld_perm_1:
      return {{1, k23, k13, Op::circ}, {-1, k12, k13, Op::bullet}, {1, k12, k23, Op::tri_l}};
    case Equation::ld_perm_2:
      return {{1, k23, k12, Op::circ}, {1, k13, k12, Op::bullet}, {1, k13, k23, Op::tri_l}};
    case Equation::ld_perm_3:
      return {{1, k12, k23, Op::circ}, {1, k13, k23, Op::bullet}, {1, k13, k12, Op::tri_l}};
    case Equation::ld_perm_4:
      return {{1, k12, k13, Op::circ}, {-1, k23, k13, Op::bullet}, {1, k23, k12, Op::tri_l}};
  }
  return {};
}

std::map<Op, StructureConstants> equation_tables(const Algebra& alg, Equation eq) {
  std::map<Op, StructureConstants> out;
  if (is_s_family(eq)) {
    const StructureConstants& c = alg.table(Op::circ);
    out[Op::circ] = c;
    out[Op::bracket] = c.commutator();
    return out;
  }
  alg.require({Op::tri_r, Op::tri_l});
  out[Op::tri_r] = alg.table(Op::tri_r);
  out[Op::tri_l] = alg.table(Op::tri_l);
  out[Op::circ] = vertical_prelie(alg).table(Op::circ);
  out[Op::bullet] = horizontal_prelie(alg).table(Op::bullet);
  out[Op::bracket] = out[Op::circ].commutator();
  return out;
}

Tensor3 residual(const Algebra& alg, const Tensor2& r, Equation eq) {
  require_dim(alg, r);
  const auto tables = equation_tables(alg, eq);
  Tensor3 out(alg.dim());
  for (const Term& term : equation_terms(eq)) {
    const Tensor3 part = slot_product(r, term.left, r, term.right, tables.at(term.product));
    if (term.sign > 0)
      out += part;
    else
      out -= part;
  }
  return out;
}

Tensor3 s_residual(const Algebra& alg, const Tensor2& r) { return residual(alg, r, Equation::s_equation); }

Tensor3 ld_residual(const Algebra& alg, const Tensor2& r, Equation variant) {
  if (is_s_family(variant))
    throw FormatError("--equation", std::string(equation_id(variant)) + " is not an LD-family equation");
  return residual(alg, r, variant);
}

bool SEquivalence::all_vanish() const {
  return s_residual.is_zero() && alternate_residual.is_zero() && operator_report.passed();
}

bool SEquivalence::none_vanish() const {
  return !s_residual.is_zero() && !alternate_residual.is_zero() && !operator_report.passed();
}

SEquivalence s_equivalence_check(const Algebra& alg, const Tensor2& r) {
  require_dim(alg, r);
  if (!r.is_symmetric()) throw DimensionError("tensor must be symmetric");
  return {s_residual(alg, r), residual(alg, r, Equation::s_equation_alternate),
          check_o_prelie(tensor_to_map(r), dual_prelie_module(regular_prelie_module(alg)))};
}

bool LDEquivalence::all_vanish() const {
  return ld_residual.is_zero() && ldend_operator_report.passed() && vertical_operator_report.passed() &&
         horizontal_operator_report.passed();
}

bool LDEquivalence::none_vanish() const {
  return !ld_residual.is_zero() && !ldend_operator_report.passed() && !vertical_operator_report.passed() &&
         !horizontal_operator_report.passed();
}

bool LDEquivalence::aux_implication_holds() const {
  return !aux_left_residual.is_zero() || aux_right_residual.is_zero();
}

LDEquivalence ld_equivalence_check(const Algebra& alg, const Tensor2& r) {
  require_dim(alg, r);
  if (!r.is_skew()) throw DimensionError("tensor must be skew-symmetric");
  const LinearMap t = tensor_to_map(r);
  return {ld_residual(alg, r),
          check_o_ldend(t, dual_ldend_module(regular_ldend_module(alg))),
          check_o_prelie(t, dual_prelie_module(vertical_module(alg))),
          check_o_prelie(t, dual_prelie_module(horizontal_module(alg))),
          ld_residual(alg, r, Equation::ld_aux_right),
          ld_residual(alg, r, Equation::ld_aux_left)};
}

Tensor2 embed_operator(const LinearMap& t) {
  const std::size_t n = t.rows();
  Tensor2 out(n + t.cols());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < t.cols(); ++i) out(a, n + i) = t(a, i);
  return out;
}

Solution build_s_solution(const PreLieModule& m, const LinearMap& t) {
  validate(m);
  if (t.rows() != m.base.dim() || t.cols() != m.vdim) throw DimensionError("operator shape does not match module");
  const Tensor2 e = embed_operator(t);
  return {semidirect_prelie(dual_prelie_module(m)), e + exchange(e)};
}

Solution build_ld_solution(const LDendModule& m, const LinearMap& t) {
  validate(m);
  if (t.rows() != m.base.dim() || t.cols() != m.vdim) throw DimensionError("operator shape does not match module");
  const Tensor2 e = embed_operator(t);
  return {semidirect_ldend(dual_ldend_module(m)), e - exchange(e)};
}

DoubleSolution canonical_double_solution(const Algebra& ldend) {
  const std::size_t n = ldend.dim();
  Tensor2 r(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    r(i, n + i) = 1;
    r(n + i, i) = 1;
  }
  return {semidirect_prelie(dual_prelie_module(vertical_module(ldend))),
          semidirect_prelie(dual_prelie_module(horizontal_module(ldend))), std::move(r)};
}

FormCriterion form_criterion_check(const Algebra& ldend, const Tensor2& r) {
  require_dim(ldend, r);
  if (!r.is_skew()) throw DimensionError("tensor must be skew-symmetric");
  FormCriterion out;
  out.form = form_from_invertible_map(tensor_to_map(r));
  out.ld_solution = ld_residual(ldend, r).is_zero();
  out.left_identity = check_form_left_identity(ldend, out.form).passed();
  out.right_identity = check_form_right_identity(ldend, out.form).passed();
  return out;
}

}  // namespace ldend

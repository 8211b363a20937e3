#include "ldend/representations.hpp"

#include <memory>
#include <string>

#include "ldend/core.hpp"
#include "ldend/error.hpp"
#include "ldend/functors.hpp"
#include "ldend/kernels.hpp"

namespace ldend {

namespace {

using kernels::Identity;
using Tuple = std::span<const std::size_t>;
using SC = StructureConstants;

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

void require_vdim(std::size_t vdim) {
  if (vdim == 0) throw DimensionError("module dimension must be positive");
}

// Block table on A + V (base coordinates first) from one base table and a
// pair of actions: e_i . v = l(e_i) v, u . e_j = r(e_j) u.
SC semidirect_table(const SC& base, const MatrixFamily& l, const MatrixFamily& r, std::size_t vdim) {
  const std::size_t n = base.dim();
  SC out(n + vdim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = base.at(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < vdim; ++a)
      for (std::size_t b = 0; b < vdim; ++b) {
        out.at(i, n + b, n + a) = l[i](a, b);
        out.at(n + b, i, n + a) = r[i](a, b);
      }
  return out;
}

struct LDendData {
  LDendModule m;
  SC right, left, circ, bullet, bracket;
};

}  // namespace

void validate(const PreLieModule& m) {
  require_vdim(m.vdim);
  require_family_shape(m.l, m.base.dim(), m.vdim, "l");
  require_family_shape(m.r, m.base.dim(), m.vdim, "r");
}

void validate(const LDendModule& m) {
  require_vdim(m.vdim);
  require_family_shape(m.l_r, m.base.dim(), m.vdim, "l_r");
  require_family_shape(m.r_r, m.base.dim(), m.vdim, "r_r");
  require_family_shape(m.l_l, m.base.dim(), m.vdim, "l_l");
  require_family_shape(m.r_l, m.base.dim(), m.vdim, "r_l");
}

void validate(const LieModule& m) {
  require_vdim(m.vdim);
  require_family_shape(m.rho, m.base.dim(), m.vdim, "rho");
}

PreLieModule regular_prelie_module(const Algebra& alg) {
  const SC& c = alg.table(Op::circ);
  return {alg, alg.dim(), left_multiplications(c), right_multiplications(c)};
}

LDendModule regular_ldend_module(const Algebra& alg) {
  const SC& r = alg.table(Op::tri_r);
  const SC& l = alg.table(Op::tri_l);
  return {alg,
          alg.dim(),
          left_multiplications(r),
          right_multiplications(r),
          left_multiplications(l),
          right_multiplications(l)};
}

LieModule adjoint_module(const Algebra& lie) {
  return {lie, lie.dim(), left_multiplications(lie.table(Op::bracket))};
}

PreLieModule horizontal_module(const Algebra& ldend) {
  return {as_prelie(horizontal_prelie(ldend), Op::bullet), ldend.dim(),
          left_multiplications(ldend.table(Op::tri_r)), right_multiplications(ldend.table(Op::tri_l))};
}

PreLieModule vertical_module(const Algebra& ldend) {
  return {vertical_prelie(ldend), ldend.dim(), left_multiplications(ldend.table(Op::tri_r)),
          -left_multiplications(ldend.table(Op::tri_l))};
}

CheckReport check_prelie_module(const PreLieModule& m) {
  validate(m);
  auto mod = std::make_shared<const PreLieModule>(m);
  auto c = std::make_shared<const SC>(m.base.table(Op::circ));
  const std::vector<std::size_t> pairs{m.base.dim(), m.base.dim()};
  const std::vector<Identity> ids{
      {"eq-2.5", pairs,
       [mod, c](Tuple t) {
         const auto& l = mod->l;
         const std::size_t x = t[0], y = t[1];
         return flatten(l[x] * l[y] - evaluate(l, c->product(x, y)) - l[y] * l[x] +
                        evaluate(l, c->product(y, x)));
       }},
      {"eq-2.6", pairs,
       [mod, c](Tuple t) {
         const auto& l = mod->l;
         const auto& r = mod->r;
         const std::size_t x = t[0], y = t[1];
         return flatten(l[x] * r[y] - r[y] * l[x] - evaluate(r, c->product(x, y)) + r[y] * r[x]);
       }},
  };
  return kernels::evaluate_parallel(ids);
}

PreLieModule dual_prelie_module(const PreLieModule& m) {
  validate(m);
  return {m.base, m.vdim, dual_rep(m.l - m.r), -dual_rep(m.r)};
}

Algebra semidirect_prelie(const PreLieModule& m) {
  validate(m);
  Algebra out(m.base.dim() + m.vdim, "pre_lie");
  out.set(Op::circ, semidirect_table(m.base.table(Op::circ), m.l, m.r, m.vdim));
  return out;
}

CheckReport check_ldend_module(const LDendModule& m) {
  validate(m);
  auto data = std::make_shared<LDendData>();
  data->m = m;
  data->right = m.base.table(Op::tri_r);
  data->left = m.base.table(Op::tri_l);
  data->circ = data->right - data->left.opposite();
  data->bullet = data->right + data->left;
  data->bracket = data->circ.commutator();
  std::shared_ptr<const LDendData> d = data;
  const std::vector<std::size_t> pairs{m.base.dim(), m.base.dim()};

  const std::vector<Identity> ids{
      {"eq-4.1", pairs,
       [d](Tuple t) {
         const auto& lr = d->m.l_r;
         return flatten(bracket(lr[t[0]], lr[t[1]]) - evaluate(lr, d->bracket.product(t[0], t[1])));
       }},
      {"eq-4.2", pairs,
       [d](Tuple t) {
         const auto& lr = d->m.l_r;
         const auto& ll = d->m.l_l;
         const std::size_t x = t[0], y = t[1];
         return flatten(bracket(lr[x], ll[y]) - evaluate(ll, d->circ.product(x, y)) - ll[y] * ll[x]);
       }},
      {"eq-4.3", pairs,
       [d](Tuple t) {
         const auto& [base, vdim, lr, rr, ll, rl] = d->m;
         const std::size_t x = t[0], y = t[1];
         const Matrix rhs = rr[y] * rr[x] + rr[y] * rl[x] + bracket(lr[x], rr[y]) - rr[y] * ll[x];
         return flatten(evaluate(rr, d->right.product(x, y)) - rhs);
       }},
      {"eq-4.4", pairs,
       [d](Tuple t) {
         const auto& [base, vdim, lr, rr, ll, rl] = d->m;
         const std::size_t x = t[0], y = t[1];
         const Matrix rhs = rl[y] * rr[x] + ll[x] * rr[y] + bracket(ll[x], rl[y]);
         return flatten(evaluate(rr, d->left.product(x, y)) - rhs);
       }},
      {"eq-4.5", pairs,
       [d](Tuple t) {
         const auto& lr = d->m.l_r;
         const auto& rl = d->m.r_l;
         const std::size_t x = t[0], y = t[1];
         return flatten(bracket(lr[x], rl[y]) - evaluate(rl, d->bullet.product(x, y)) + rl[y] * rl[x]);
       }},
  };
  return kernels::evaluate_parallel(ids);
}

LDendModule dual_ldend_module(const LDendModule& m) {
  validate(m);
  return {m.base,
          m.vdim,
          dual_rep(m.l_r + m.l_l - m.r_r - m.r_l),
          dual_rep(m.r_r),
          dual_rep(m.r_r - m.l_l),
          -dual_rep(m.r_r + m.r_l)};
}

Algebra semidirect_ldend(const LDendModule& m) {
  validate(m);
  Algebra out(m.base.dim() + m.vdim, "l_dendriform");
  out.set(Op::tri_r, semidirect_table(m.base.table(Op::tri_r), m.l_r, m.r_r, m.vdim));
  out.set(Op::tri_l, semidirect_table(m.base.table(Op::tri_l), m.l_l, m.r_l, m.vdim));
  return out;
}

}  // namespace ldend

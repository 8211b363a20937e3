#include "ldend/axioms.hpp"

#include <memory>
#include <string>

#include "ldend/error.hpp"
#include "ldend/functors.hpp"

namespace ldend {

namespace {

using kernels::Identity;
using Tuple = std::span<const std::size_t>;
using SC = StructureConstants;

Vector mul(const SC& c, const Vector& x, const Vector& y) { return c.product(x, y); }

// Basis vectors of a fixed dimension.
struct Basis {
  std::size_t n;
  Vector operator()(std::size_t i) const { return unit_vector(n, i); }
};

Vector scalar_vector(Scalar s) { return Vector{std::move(s)}; }

std::vector<std::size_t> cube(std::size_t n) { return {n, n, n}; }
std::vector<std::size_t> square(std::size_t n) { return {n, n}; }

std::vector<Identity> pre_lie_identities(const Algebra& alg) {
  auto c = std::make_shared<const SC>(alg.table(Op::circ));
  const Basis e{alg.dim()};
  auto assoc = [c](const Vector& x, const Vector& y, const Vector& z) {
    return mul(*c, mul(*c, x, y), z) - mul(*c, x, mul(*c, y, z));
  };
  return {{"eq-2.2", cube(alg.dim()), [=](Tuple t) {
             return assoc(e(t[0]), e(t[1]), e(t[2])) - assoc(e(t[1]), e(t[0]), e(t[2]));
           }}};
}

std::vector<Identity> associative_identities(const Algebra& alg) {
  auto c = std::make_shared<const SC>(alg.table(Op::circ));
  const Basis e{alg.dim()};
  return {{"associativity", cube(alg.dim()), [=](Tuple t) {
             return mul(*c, mul(*c, e(t[0]), e(t[1])), e(t[2])) - mul(*c, e(t[0]), mul(*c, e(t[1]), e(t[2])));
           }}};
}

std::vector<Identity> lie_identities(const Algebra& alg) {
  auto b = std::make_shared<const SC>(alg.table(Op::bracket));
  const Basis e{alg.dim()};
  return {
      {"lie-antisymmetry", square(alg.dim()),
       [=](Tuple t) { return mul(*b, e(t[0]), e(t[1])) + mul(*b, e(t[1]), e(t[0])); }},
      {"lie-jacobi", cube(alg.dim()),
       [=](Tuple t) {
         const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
         return mul(*b, x, mul(*b, y, z)) + mul(*b, y, mul(*b, z, x)) + mul(*b, z, mul(*b, x, y));
       }},
  };
}

// (prec, succ) dendriform identities with star = prec + succ.
std::vector<Identity> dendriform_identities(const SC& prec_table, const SC& succ_table, std::size_t n,
                                            const std::string& prefix) {
  auto p = std::make_shared<const SC>(prec_table);
  auto s = std::make_shared<const SC>(succ_table);
  auto st = std::make_shared<const SC>(prec_table + succ_table);
  const Basis e{n};
  return {
      {prefix + "-left", cube(n),
       [=](Tuple t) {
         const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
         return mul(*p, mul(*p, x, y), z) - mul(*p, x, mul(*st, y, z));
       }},
      {prefix + "-middle", cube(n),
       [=](Tuple t) {
         const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
         return mul(*p, mul(*s, x, y), z) - mul(*s, x, mul(*p, y, z));
       }},
      {prefix + "-right", cube(n),
       [=](Tuple t) {
         const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
         return mul(*s, x, mul(*s, y, z)) - mul(*s, mul(*st, x, y), z);
       }},
  };
}

std::vector<Identity> l_dendriform_identities(const Algebra& alg) {
  auto r = std::make_shared<const SC>(alg.table(Op::tri_r));
  auto l = std::make_shared<const SC>(alg.table(Op::tri_l));
  const Basis e{alg.dim()};
  return {
      {"eq-3.1", cube(alg.dim()),
       [=](Tuple t) {
         const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
         Vector rhs = mul(*r, mul(*r, x, y), z);
         rhs = rhs + mul(*r, mul(*l, x, y), z);
         rhs = rhs + mul(*r, y, mul(*r, x, z));
         rhs = rhs - mul(*r, mul(*l, y, x), z);
         rhs = rhs - mul(*r, mul(*r, y, x), z);
         return mul(*r, x, mul(*r, y, z)) - rhs;
       }},
      {"eq-3.2", cube(alg.dim()),
       [=](Tuple t) {
         const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
         Vector rhs = mul(*l, mul(*r, x, y), z);
         rhs = rhs + mul(*l, y, mul(*r, x, z));
         rhs = rhs + mul(*l, y, mul(*l, x, z));
         rhs = rhs - mul(*l, mul(*l, y, x), z);
         return mul(*r, x, mul(*l, y, z)) - rhs;
       }},
  };
}

std::vector<Identity> quadri_identities(const Algebra& alg) {
  alg.require({Op::se, Op::ne, Op::nw, Op::sw});
  struct Arrows {
    SC se, ne, nw, sw, succ, prec, vee, wedge, star;
  };
  auto a = std::make_shared<Arrows>();
  a->se = alg.table(Op::se);
  a->ne = alg.table(Op::ne);
  a->nw = alg.table(Op::nw);
  a->sw = alg.table(Op::sw);
  a->succ = a->ne + a->se;
  a->prec = a->nw + a->sw;
  a->vee = a->se + a->sw;
  a->wedge = a->ne + a->nw;
  a->star = a->succ + a->prec;
  std::shared_ptr<const Arrows> q = a;
  const Basis e{alg.dim()};
  const std::size_t n = alg.dim();

  // (x op1 y) op2 z - x op3 (y op4 z)
  auto rule = [=](std::string id, const SC Arrows::*op1, const SC Arrows::*op2, const SC Arrows::*op3,
                  const SC Arrows::*op4) {
    return Identity{std::move(id), cube(n), [=](Tuple t) {
                      const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
                      return mul((*q).*op2, mul((*q).*op1, x, y), z) - mul((*q).*op3, x, mul((*q).*op4, y, z));
                    }};
  };
  using A = Arrows;
  return {
      rule("eq-3.17-left", &A::nw, &A::nw, &A::nw, &A::star),
      rule("eq-3.17-middle", &A::ne, &A::nw, &A::ne, &A::prec),
      rule("eq-3.17-right", &A::wedge, &A::ne, &A::ne, &A::succ),
      rule("eq-3.18-left", &A::sw, &A::nw, &A::sw, &A::wedge),
      rule("eq-3.18-middle", &A::se, &A::nw, &A::se, &A::nw),
      rule("eq-3.18-right", &A::vee, &A::ne, &A::se, &A::ne),
      rule("eq-3.19-left", &A::prec, &A::sw, &A::sw, &A::vee),
      rule("eq-3.19-middle", &A::succ, &A::sw, &A::se, &A::sw),
      rule("eq-3.19-right", &A::star, &A::se, &A::se, &A::se),
  };
}

void require_form_dim(const Algebra& alg, const BilinearForm& form) {
  if (form.dim() != alg.dim())
    throw DimensionError("bilinear form has dimension " + std::to_string(form.dim()) + ", algebra has " +
                         std::to_string(alg.dim()));
}

struct LDendProducts {
  SC right, left, circ, bullet, bracket;
};

std::shared_ptr<const LDendProducts> ldend_products(const Algebra& alg) {
  auto p = std::make_shared<LDendProducts>();
  p->right = alg.table(Op::tri_r);
  p->left = alg.table(Op::tri_l);
  p->circ = p->right - p->left.opposite();
  p->bullet = p->right + p->left;
  p->bracket = p->circ.commutator();
  return p;
}

Identity skew_identity(std::shared_ptr<const BilinearForm> b, std::size_t n) {
  const Basis e{n};
  return {"skew-symmetry", square(n),
          [=](Tuple t) { return scalar_vector((*b)(e(t[0]), e(t[1])) + (*b)(e(t[1]), e(t[0]))); }};
}

Identity form_left_identity(std::shared_ptr<const LDendProducts> p, std::shared_ptr<const BilinearForm> b,
                            std::size_t n) {
  const Basis e{n};
  return {"eq-4.16", cube(n), [=](Tuple t) {
            const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
            return scalar_vector((*b)(mul(p->left, x, y), z) + (*b)(y, mul(p->circ, z, x)) -
                                 (*b)(x, mul(p->bullet, z, y)));
          }};
}

Identity form_right_identity(std::shared_ptr<const LDendProducts> p, std::shared_ptr<const BilinearForm> b,
                             std::size_t n) {
  const Basis e{n};
  return {"eq-4.15", cube(n), [=](Tuple t) {
            const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
            return scalar_vector((*b)(mul(p->right, x, y), z) + (*b)(y, mul(p->bracket, x, z)) +
                                 (*b)(x, mul(p->right, z, y)));
          }};
}

}  // namespace

std::string_view class_name(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::pre_lie: return "pre_lie";
    case AlgebraClass::lie: return "lie";
    case AlgebraClass::associative: return "associative";
    case AlgebraClass::dendriform: return "dendriform";
    case AlgebraClass::l_dendriform: return "l_dendriform";
    case AlgebraClass::quadri: return "quadri";
  }
  return "?";
}

AlgebraClass parse_class(std::string_view name) {
  for (auto c : {AlgebraClass::pre_lie, AlgebraClass::lie, AlgebraClass::associative, AlgebraClass::dendriform,
                 AlgebraClass::l_dendriform, AlgebraClass::quadri})
    if (class_name(c) == name) return c;
  throw FormatError("--class", "unknown algebra class \"" + std::string(name) + "\"");
}

std::vector<kernels::Identity> class_identities(const Algebra& alg, AlgebraClass c) {
  switch (c) {
    case AlgebraClass::pre_lie: return pre_lie_identities(alg);
    case AlgebraClass::lie: return lie_identities(alg);
    case AlgebraClass::associative: return associative_identities(alg);
    case AlgebraClass::dendriform:
      if (!alg.has(Op::succ) && !alg.has(Op::prec) && alg.has(Op::vee) && alg.has(Op::wedge))
        return dendriform_identities(alg.table(Op::wedge), alg.table(Op::vee), alg.dim(), "eq-1.1");
      return dendriform_identities(alg.table(Op::prec), alg.table(Op::succ), alg.dim(), "eq-1.1");
    case AlgebraClass::l_dendriform:
      alg.require({Op::tri_r, Op::tri_l});
      return l_dendriform_identities(alg);
    case AlgebraClass::quadri: return quadri_identities(alg);
  }
  return {};
}

CheckReport check_class(const Algebra& alg, AlgebraClass c) {
  const auto identities = class_identities(alg, c);
  return kernels::evaluate_parallel(identities);
}

CheckReport check_prelie_cocycle(const Algebra& alg, const BilinearForm& form) {
  require_form_dim(alg, form);
  auto c = std::make_shared<const SC>(alg.table(Op::circ));
  auto b = std::make_shared<const BilinearForm>(form);
  const Basis e{alg.dim()};
  const std::vector<Identity> ids{{"eq-2.8", cube(alg.dim()), [=](Tuple t) {
                                     const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
                                     return scalar_vector((*b)(mul(*c, x, y), z) - (*b)(x, mul(*c, y, z)) -
                                                          (*b)(mul(*c, y, x), z) + (*b)(y, mul(*c, x, z)));
                                   }}};
  return kernels::evaluate_parallel(ids);
}

CheckReport check_ldend_cocycle(const Algebra& alg, const BilinearForm& form) {
  require_form_dim(alg, form);
  auto p = ldend_products(alg);
  auto b = std::make_shared<const BilinearForm>(form);
  const std::vector<Identity> ids{skew_identity(b, alg.dim()), form_left_identity(p, b, alg.dim())};
  return kernels::evaluate_parallel(ids);
}

CheckReport check_form_left_identity(const Algebra& alg, const BilinearForm& form) {
  require_form_dim(alg, form);
  const std::vector<Identity> ids{
      form_left_identity(ldend_products(alg), std::make_shared<const BilinearForm>(form), alg.dim())};
  return kernels::evaluate_parallel(ids);
}

CheckReport check_form_right_identity(const Algebra& alg, const BilinearForm& form) {
  require_form_dim(alg, form);
  const std::vector<Identity> ids{
      form_right_identity(ldend_products(alg), std::make_shared<const BilinearForm>(form), alg.dim())};
  return kernels::evaluate_parallel(ids);
}

}  // namespace ldend

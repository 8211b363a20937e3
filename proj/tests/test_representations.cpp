#include <doctest.h>

#include "ldend/axioms.hpp"
#include "ldend/catalog.hpp"
#include "ldend/error.hpp"
#include "ldend/functors.hpp"
#include "ldend/representations.hpp"
#include "support/oracle.hpp"

using namespace ldend;

namespace {

MatrixFamily zero_family(std::size_t count, std::size_t vdim) { return MatrixFamily(count, Matrix(vdim, vdim)); }

bool has_identity(const CheckReport& r, const std::string& id) {
  for (const auto& f : r.failures)
    if (f.identity == id) return true;
  return false;
}

// (x + u) * (y + v) = x o y + l(x) v + r(y) u on basis vectors, computed
// directly from the module data.
oracle::Vec semidirect_product(const PreLieModule& m, const oracle::Vec& xu, const oracle::Vec& yv) {
  const std::size_t n = m.base.dim(), d = m.vdim;
  oracle::Vec x(xu.begin(), xu.begin() + n), u(xu.begin() + n, xu.end());
  oracle::Vec y(yv.begin(), yv.begin() + n), v(yv.begin() + n, yv.end());
  oracle::Vec out = oracle::product(m.base.table(Op::circ), x, y);
  out.resize(n + d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) out[n + p] += x[a] * m.l[a](p, q) * v[q] + y[a] * m.r[a](p, q) * u[q];
  return out;
}

PreLieModule random_module(const Algebra& base, std::size_t vdim) {
  PreLieModule m{base, vdim, {}, {}};
  for (std::size_t i = 0; i < base.dim(); ++i) {
    m.l.push_back(gen::matrix(vdim, vdim, -1, 1));
    m.r.push_back(gen::matrix(vdim, vdim, -1, 1));
  }
  return m;
}

}  // namespace

TEST_CASE("pre-Lie module checks") {
  const Algebra p2 = fixtures::p2();
  CHECK(check_prelie_module({p2, 2, zero_family(2, 2), zero_family(2, 2)}).passed());
  const PreLieModule reg = regular_prelie_module(p2);
  CHECK(check_prelie_module(reg).passed());
  CHECK(check_prelie_module({p2, 2, reg.l, zero_family(2, 2)}).passed());
  // l = 0 with r(e_i) = I fails the second identity: r(e2 o e2) = 0.
  const CheckReport bad = check_prelie_module({p2, 2, zero_family(2, 2), {Matrix::identity(2), Matrix::identity(2)}});
  CHECK_FALSE(bad.passed());
  CHECK(has_identity(bad, "eq-2.6"));
  CHECK_FALSE(has_identity(bad, "eq-2.5"));
}

TEST_CASE("regular module of P2") {
  const PreLieModule reg = regular_prelie_module(fixtures::p2());
  CHECK(reg.l[0] == Matrix::identity(2));
  CHECK(reg.l[1] == Matrix(2, 2));
  CHECK(reg.r[0] == Matrix::from_rows({{1, 0}, {0, 0}}));
  CHECK(reg.r[1] == Matrix::from_rows({{0, 0}, {1, 0}}));
}

TEST_CASE("dual pre-Lie module") {
  const PreLieModule reg = regular_prelie_module(fixtures::p2());
  const PreLieModule dual = dual_prelie_module(reg);
  CHECK(dual.l[0] == Matrix::from_rows({{0, 0}, {0, -1}}));
  CHECK(dual.l[1] == Matrix::from_rows({{0, 1}, {0, 0}}));
  CHECK(dual.r[0] == Matrix::from_rows({{1, 0}, {0, 0}}));
  CHECK(dual.r[1] == Matrix::from_rows({{0, 1}, {0, 0}}));
  CHECK(check_prelie_module(dual).passed());
  CHECK(dual_prelie_module(dual) == reg);
  const PreLieModule zero{fixtures::p2(), 3, zero_family(2, 3), zero_family(2, 3)};
  CHECK(dual_prelie_module(zero) == zero);
}

TEST_CASE("pre-Lie semidirect sums") {
  const Algebra z = semidirect_prelie({fixtures::z2(), 2, zero_family(2, 2), zero_family(2, 2)});
  CHECK(z.dim() == 4);
  CHECK(z.table(Op::circ).is_zero());
  for (const PreLieModule& m : {regular_prelie_module(fixtures::p2()), dual_prelie_module(regular_prelie_module(fixtures::p2()))}) {
    const Algebra s = semidirect_prelie(m);
    CHECK(check_class(s, AlgebraClass::pre_lie).passed());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const oracle::Vec want = semidirect_product(m, oracle::basis(4, i), oracle::basis(4, j));
        for (std::size_t k = 0; k < 4; ++k) CHECK(s.table(Op::circ).at(i, j, k) == want[k]);
      }
  }
}

TEST_CASE("pre-Lie module iff semidirect is pre-Lie, both directions") {
  int passing = 0, failing = 0;
  for (int round = 0; round < 60; ++round) {
    const PreLieModule m = random_module(fixtures::p2(), 1 + round % 2);
    const bool module = check_prelie_module(m).passed();
    CHECK(module == check_class(semidirect_prelie(m), AlgebraClass::pre_lie).passed());
    (module ? passing : failing)++;
  }
  CHECK(failing > 0);
  for (const PreLieModule& m : {regular_prelie_module(fixtures::p2()), dual_prelie_module(regular_prelie_module(fixtures::p1()))})
    CHECK(check_class(semidirect_prelie(m), AlgebraClass::pre_lie).passed());
}

TEST_CASE("modules attached to an L-dendriform algebra") {
  const Algebra ld = fixtures::ld2();
  const PreLieModule h = horizontal_module(ld);
  const PreLieModule v = vertical_module(ld);
  CHECK(h.base.table(Op::circ) == horizontal_prelie(ld).table(Op::bullet));
  CHECK(v.base.table(Op::circ) == vertical_prelie(ld).table(Op::circ));
  CHECK(check_prelie_module(h).passed());
  CHECK(check_prelie_module(v).passed());
  CHECK(check_prelie_module(dual_prelie_module(h)).passed());
  CHECK(check_prelie_module(dual_prelie_module(v)).passed());
  const LDendModule reg = regular_ldend_module(ld);
  CHECK(h.l == reg.l_r);
  CHECK(h.r == reg.r_l);
  CHECK(v.l == reg.l_r);
  CHECK(v.r == -reg.l_l);
}

TEST_CASE("L-dendriform module checks") {
  const Algebra ld = fixtures::ld2();
  CHECK(check_ldend_module({ld, 2, zero_family(2, 2), zero_family(2, 2), zero_family(2, 2), zero_family(2, 2)}).passed());
  const LDendModule reg = regular_ldend_module(ld);
  CHECK(check_ldend_module(reg).passed());
  LDendModule bad{ld, 2, {Matrix::from_rows({{0, 1}, {0, 0}}), Matrix::from_rows({{0, 0}, {1, 0}})},
                  zero_family(2, 2), zero_family(2, 2), zero_family(2, 2)};
  const CheckReport r = check_ldend_module(bad);
  CHECK_FALSE(r.passed());
  CHECK(has_identity(r, "eq-4.1"));
  CHECK_THROWS_AS(check_ldend_module({ld, 2, zero_family(1, 2), zero_family(2, 2), zero_family(2, 2), zero_family(2, 2)}),
                  DimensionError);
}

TEST_CASE("dual L-dendriform module") {
  const LDendModule reg = regular_ldend_module(fixtures::ld2());
  const LDendModule dual = dual_ldend_module(reg);
  CHECK(check_ldend_module(dual).passed());
  for (std::size_t i = 0; i < 2; ++i) {
    const Matrix sum = reg.l_r[i] + reg.l_l[i] - reg.r_r[i] - reg.r_l[i];
    CHECK(dual.l_r[i] == -sum.transpose());
    CHECK(dual.r_r[i] == -reg.r_r[i].transpose());
  }
  const LDendModule zero{fixtures::ld2(), 2, zero_family(2, 2), zero_family(2, 2), zero_family(2, 2), zero_family(2, 2)};
  CHECK(dual_ldend_module(zero) == zero);
}

TEST_CASE("L-dendriform semidirect sums") {
  const LDendModule reg = regular_ldend_module(fixtures::ld2());
  for (const LDendModule& m : {reg, dual_ldend_module(reg)}) {
    const Algebra s = semidirect_ldend(m);
    CHECK(s.dim() == 4);
    CHECK(check_class(s, AlgebraClass::l_dendriform).passed());
  }
  // Blocks: base first, module second; V.V vanishes.
  const Algebra s = semidirect_ldend(reg);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(s.table(Op::tri_r).at(2 + a, 2 + b, k) == 0);
        CHECK(s.table(Op::tri_l).at(2 + a, 2 + b, k) == 0);
      }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        CHECK(s.table(Op::tri_r).at(i, 2 + b, 2 + a) == reg.l_r[i](a, b));
        CHECK(s.table(Op::tri_l).at(2 + b, i, 2 + a) == reg.r_l[i](a, b));
      }
}

TEST_CASE("L-dendriform module iff semidirect is L-dendriform, both directions") {
  const Algebra ld = fixtures::ld2();
  int failing = 0;
  for (int round = 0; round < 40; ++round) {
    LDendModule m{ld, 1, {}, {}, {}, {}};
    for (auto* fam : {&m.l_r, &m.r_r, &m.l_l, &m.r_l})
      for (int i = 0; i < 2; ++i) fam->push_back(gen::matrix(1, 1, -1, 1));
    const bool module = check_ldend_module(m).passed();
    CHECK(module == check_class(semidirect_ldend(m), AlgebraClass::l_dendriform).passed());
    if (!module) ++failing;
  }
  CHECK(failing > 0);
  CHECK(check_class(semidirect_ldend(dual_ldend_module(regular_ldend_module(ld))), AlgebraClass::l_dendriform).passed());
}

TEST_CASE("adjoint module") {
  const LieModule ad = adjoint_module(fixtures::l2());
  CHECK(ad.vdim == 2);
  // ad(e1) e2 = e2.
  CHECK(ad.rho[0](1, 1) == 1);
  CHECK(ad.rho[1](1, 0) == -1);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(validate(PreLieModule{fixtures::p2(), 2, zero_family(2, 2), zero_family(2, 3)}), DimensionError);
  CHECK_THROWS_AS(validate(PreLieModule{fixtures::p2(), 0, {}, {}}), DimensionError);
  CHECK_THROWS_AS(check_prelie_module({fixtures::p2(), 2, zero_family(3, 2), zero_family(2, 2)}), DimensionError);
}

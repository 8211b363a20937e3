#include <doctest.h>

#include "ldend/axioms.hpp"
#include "ldend/catalog.hpp"
#include "ldend/error.hpp"
#include "ldend/functors.hpp"
#include "support/oracle.hpp"

using namespace ldend;

namespace {

std::vector<std::size_t> idx(std::initializer_list<std::size_t> xs) { return xs; }

Algebra quadri_dim1(int lambda) {
  Algebra q(1);
  for (Op op : {Op::se, Op::ne, Op::nw, Op::sw}) q.set(op, make_table(1, {{0, 0, 0, lambda}}));
  return q;
}

}  // namespace

TEST_CASE("fixture classes") {
  CHECK(check_class(fixtures::z2(), AlgebraClass::pre_lie).passed());
  CHECK(check_class(fixtures::p1(), AlgebraClass::pre_lie).passed());
  CHECK(check_class(fixtures::p2(), AlgebraClass::pre_lie).passed());
  CHECK(check_class(fixtures::p2(), AlgebraClass::associative).passed());
  CHECK(check_class(fixtures::l2(), AlgebraClass::lie).passed());
  CHECK(check_class(fixtures::ld2(), AlgebraClass::l_dendriform).passed());
  CHECK(check_class(fixtures::d2(), AlgebraClass::dendriform).passed());
  CHECK(check_class(fixtures::q2(), AlgebraClass::quadri).passed());
  CHECK(check_class(fixtures::q0(), AlgebraClass::quadri).passed());
}

TEST_CASE("N2 fails pre-Lie with the oracle's counterexamples") {
  const CheckReport r = check_class(fixtures::n2(), AlgebraClass::pre_lie);
  CHECK(r.evaluated == 8);
  REQUIRE(r.failures.size() == 4);
  CHECK(r.failures[0] == Failure{"eq-2.2", idx({1, 2, 1}), {0, 1}});
  CHECK(r.failures[1] == Failure{"eq-2.2", idx({1, 2, 2}), {1, 0}});
  CHECK(r.failures[2] == Failure{"eq-2.2", idx({2, 1, 1}), {0, -1}});
  CHECK(r.failures[3] == Failure{"eq-2.2", idx({2, 1, 2}), {-1, 0}});
}

TEST_CASE("Lie checks") {
  // A non-antisymmetric table fails antisymmetry at (1,1).
  Algebra bad(1);
  bad.set(Op::bracket, make_table(1, {{0, 0, 0, 1}}));
  const CheckReport r = check_class(bad, AlgebraClass::lie);
  REQUIRE_FALSE(r.passed());
  CHECK(r.failures[0] == Failure{"lie-antisymmetry", idx({1, 1}), {2}});
  // Commutator of any associative table is Lie.
  CHECK(check_class(sub_adjacent_lie(fixtures::p2()), AlgebraClass::lie).passed());
  CHECK(check_class(sub_adjacent_lie(fixtures::n2()), AlgebraClass::lie).passed());
}

TEST_CASE("associativity failure") {
  Algebra n(2);
  n.set(Op::circ, fixtures::n2().table(Op::circ));
  const CheckReport r = check_class(n, AlgebraClass::associative);
  CHECK_FALSE(r.passed());
  CHECK(r.failures.front().identity == "associativity");
}

TEST_CASE("missing tables are reported") {
  CHECK_THROWS_AS(check_class(fixtures::p2(), AlgebraClass::lie), MissingOperation);
  CHECK_THROWS_AS(check_class(fixtures::p2(), AlgebraClass::l_dendriform), MissingOperation);
  CHECK_THROWS_AS(check_class(fixtures::p2(), AlgebraClass::quadri), MissingOperation);
  CHECK_THROWS_AS(check_class(fixtures::p2(), AlgebraClass::dendriform), MissingOperation);
}

TEST_CASE("dim-1 quadri with lambda = 1 fails six of nine identities") {
  CHECK(check_class(quadri_dim1(0), AlgebraClass::quadri).passed());
  const CheckReport r = check_class(quadri_dim1(1), AlgebraClass::quadri);
  REQUIRE(r.failures.size() == 6);
  CHECK(r.failures[0] == Failure{"eq-3.17-left", idx({1, 1, 1}), {-3}});
  CHECK(r.failures[1] == Failure{"eq-3.17-middle", idx({1, 1, 1}), {-1}});
  CHECK(r.failures[2] == Failure{"eq-3.18-left", idx({1, 1, 1}), {-1}});
  CHECK(r.failures[3] == Failure{"eq-3.18-right", idx({1, 1, 1}), {1}});
  CHECK(r.failures[4] == Failure{"eq-3.19-middle", idx({1, 1, 1}), {1}});
  CHECK(r.failures[5] == Failure{"eq-3.19-right", idx({1, 1, 1}), {3}});
}

TEST_CASE("valid quadri algebras project to dendriform and L-dendriform") {
  for (const Algebra& q : {fixtures::q2(), fixtures::q0(), quadri_dim1(0)}) {
    REQUIRE(check_class(q, AlgebraClass::quadri).passed());
    CHECK(check_class(quadri_derive(q, QuadriDerived::succ_prec), AlgebraClass::dendriform).passed());
    CHECK(check_class(quadri_derive(q, QuadriDerived::vee_wedge), AlgebraClass::dendriform).passed());
    CHECK(check_class(as_prelie(quadri_derive(q, QuadriDerived::star), Op::star), AlgebraClass::associative)
              .passed());
    CHECK(check_class(quadri_derive(q, QuadriDerived::l_dendriform), AlgebraClass::l_dendriform).passed());
  }
}

TEST_CASE("dendriform checks") {
  const CheckReport r = check_class(fixtures::d2(), AlgebraClass::dendriform);
  CHECK(r.passed());
  CHECK(r.evaluated == 3 * 8);
  // Swapping the two products breaks it.
  Algebra swapped(2);
  swapped.set(Op::succ, fixtures::d2().table(Op::prec));
  swapped.set(Op::prec, fixtures::d2().table(Op::succ));
  CHECK_FALSE(check_class(swapped, AlgebraClass::dendriform).passed());
}

TEST_CASE("L-dendriform failure on a perturbed LD2") {
  Algebra bad = fixtures::ld2();
  StructureConstants left = bad.table(Op::tri_l);
  left.at(1, 1, 1) = 1;
  bad.set(Op::tri_l, left);
  const CheckReport r = check_class(bad, AlgebraClass::l_dendriform);
  CHECK_FALSE(r.passed());
  for (const auto& f : r.failures) CHECK((f.identity == "eq-3.1" || f.identity == "eq-3.2"));
}

TEST_CASE("pre-Lie 2-cocycles") {
  CHECK(check_prelie_cocycle(fixtures::z2(), BilinearForm(gen::matrix(2, 2))).passed());
  const CheckReport r = check_prelie_cocycle(fixtures::p2(), BilinearForm(Matrix::identity(2)));
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0] == Failure{"eq-2.8", idx({1, 2, 2}), {2}});
  CHECK(r.failures[1] == Failure{"eq-2.8", idx({2, 1, 2}), {-2}});
  CHECK_THROWS_AS(check_prelie_cocycle(fixtures::p2(), BilinearForm(Matrix::identity(3))), DimensionError);
}

TEST_CASE("L-dendriform 2-cocycles and form identities") {
  const BilinearForm skew(Matrix::from_rows({{0, 1}, {-1, 0}}));
  const CheckReport left = check_form_left_identity(fixtures::ld2(), skew);
  REQUIRE(left.failures.size() == 2);
  CHECK(left.failures[0] == Failure{"eq-4.16", idx({1, 2, 2}), {-2}});
  CHECK(left.failures[1] == Failure{"eq-4.16", idx({2, 2, 1}), {-1}});
  const CheckReport right = check_form_right_identity(fixtures::ld2(), skew);
  REQUIRE(right.failures.size() == 2);
  CHECK(right.failures[0] == Failure{"eq-4.15", idx({1, 2, 2}), {1}});
  CHECK(right.failures[1] == Failure{"eq-4.15", idx({2, 2, 1}), {-1}});

  const CheckReport cocycle = check_ldend_cocycle(fixtures::ld2(), BilinearForm(Matrix::identity(2)));
  CHECK_FALSE(cocycle.passed());
  CHECK(cocycle.failures.front() == Failure{"skew-symmetry", idx({1, 1}), {2}});

  Algebra zero(2);
  zero.set(Op::tri_r, StructureConstants(2));
  zero.set(Op::tri_l, StructureConstants(2));
  CHECK(check_ldend_cocycle(zero, skew).passed());
}

TEST_CASE("class names round-trip") {
  for (auto c : {AlgebraClass::pre_lie, AlgebraClass::lie, AlgebraClass::associative, AlgebraClass::dendriform,
                 AlgebraClass::l_dendriform, AlgebraClass::quadri})
    CHECK(parse_class(class_name(c)) == c);
  CHECK_THROWS_AS(parse_class("jordan"), FormatError);
}

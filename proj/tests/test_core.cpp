#include <doctest.h>

#include "ldend/algebra.hpp"
#include "ldend/catalog.hpp"
#include "ldend/core.hpp"
#include "ldend/error.hpp"
#include "ldend/matrix.hpp"
#include "ldend/scalar.hpp"
#include "ldend/tensor.hpp"
#include "support/oracle.hpp"

using namespace ldend;

namespace {

Vector v(std::initializer_list<int> xs) {
  Vector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("scalars parse and print in reduced form") {
  CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
  CHECK(format_scalar(parse_scalar("-0")) == "0");
  CHECK(format_scalar(parse_scalar("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_scalar("10/-4"), FormatError);
  CHECK(format_scalar(parse_scalar("+7")) == "7");
  CHECK(format_scalar(parse_scalar("0/5")) == "0");
  CHECK_THROWS_AS(parse_scalar("1/0"), FormatError);
  CHECK_THROWS_AS(parse_scalar("1.5"), FormatError);
  CHECK_THROWS_AS(parse_scalar(""), FormatError);
  CHECK_THROWS_AS(parse_scalar("1/"), FormatError);
  CHECK_THROWS_AS(parse_scalar("x"), FormatError);
  CHECK(parse_scalar("123456789012345678901234567890") * 2 == parse_scalar("246913578024691357802469135780"));
}

TEST_CASE("vector helpers") {
  CHECK(unit_vector(3, 1) == v({0, 1, 0}));
  CHECK(v({1, 2}) + v({3, -2}) == v({4, 0}));
  CHECK(v({1, 2}) - v({3, -2}) == v({-2, 4}));
  CHECK(Scalar(3) * v({1, -1}) == v({3, -3}));
  Vector acc = v({1, 1});
  axpy(acc, Scalar(2), v({1, 0}));
  CHECK(acc == v({3, 1}));
  CHECK(is_zero(zero_vector(4)));
}

TEST_CASE("exact matrix algebra") {
  const Matrix a = Matrix::from_rows({{2, 1}, {7, 4}});
  CHECK(a.determinant() == 1);
  CHECK(a.rank() == 2);
  CHECK(a * a.inverse() == Matrix::identity(2));
  CHECK(a.inverse() == Matrix::from_rows({{4, -1}, {-7, 2}}));
  CHECK(Matrix::from_rows({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(Matrix::from_rows({{1, 2}, {2, 4}}).determinant() == 0);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {2, 4}}).inverse(), SingularMatrix);
  CHECK_THROWS_AS(Matrix(2, 3).inverse(), SingularMatrix);
  CHECK(Matrix::from_rows({{0, 1}, {1, 0}}).determinant() == -1);
  CHECK(a.transpose() == Matrix::from_rows({{2, 7}, {1, 4}}));
  CHECK(a.apply(v({1, 1})) == v({3, 11}));
  CHECK(a.column(1) == v({1, 4}));
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), DimensionError);
}

TEST_CASE("random matrices invert exactly") {
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = gen::matrix(4, 4);
    if (m.determinant() == 0) {
      CHECK(m.rank() < 4);
      continue;
    }
    CHECK(m.rank() == 4);
    CHECK(m * m.inverse() == Matrix::identity(4));
    CHECK(m.inverse() * m == Matrix::identity(4));
    CHECK(m.transpose().determinant() == m.determinant());
  }
}

TEST_CASE("multiply reads the table") {
  const Algebra z2 = fixtures::z2();
  CHECK(multiply(z2, Op::circ, v({1, 2}), v({3, -1})) == v({0, 0}));
  const Algebra p2 = fixtures::p2();
  CHECK(multiply(p2, Op::circ, unit_vector(2, 0), unit_vector(2, 1)) == unit_vector(2, 1));
  CHECK(multiply(p2, Op::circ, unit_vector(2, 1), unit_vector(2, 1)) == v({0, 0}));
  CHECK_THROWS_AS(multiply(p2, Op::bracket, v({1, 0}), v({1, 0})), MissingOperation);
  CHECK_THROWS_AS(multiply(p2, Op::circ, v({1, 0, 0}), v({1, 0})), DimensionError);
}

TEST_CASE("multiply is bilinear") {
  const StructureConstants c = gen::table(3);
  Algebra alg(3);
  alg.set(Op::circ, c);
  for (int trial = 0; trial < 10; ++trial) {
    Vector x(3), y(3), z(3);
    for (auto* w : {&x, &y, &z})
      for (auto& s : *w) s = gen::small();
    const Scalar k = gen::small();
    CHECK(multiply(alg, Op::circ, x + k * y, z) ==
          multiply(alg, Op::circ, x, z) + k * multiply(alg, Op::circ, y, z));
    CHECK(multiply(alg, Op::circ, z, x + k * y) ==
          multiply(alg, Op::circ, z, x) + k * multiply(alg, Op::circ, z, y));
  }
}

TEST_CASE("algebra tables") {
  Algebra alg(2);
  CHECK_FALSE(alg.has(Op::circ));
  CHECK_THROWS_AS(alg.table(Op::circ), MissingOperation);
  CHECK_THROWS_AS(alg.set(Op::circ, StructureConstants(3)), DimensionError);
  const StructureConstants c = fixtures::p2().table(Op::circ);
  CHECK(c.opposite().at(1, 0, 1) == 1);
  CHECK(c.commutator() == fixtures::l2().table(Op::bracket));
  CHECK(parse_op("tri_r") == Op::tri_r);
  CHECK(op_name(Op::sw) == "sw");
  CHECK_THROWS_AS(parse_op("times"), FormatError);
}

TEST_CASE("slot product examples") {
  const StructureConstants p1 = fixtures::p1().table(Op::circ);
  Tensor2 one(1);
  one(0, 0) = 1;
  const Tensor3 t = slot_product(one, k12, one, k13, p1);
  CHECK(t(0, 0, 0) == 1);

  const StructureConstants p2 = fixtures::p2().table(Op::circ);
  Tensor2 r(2);
  r(0, 1) = 1;
  const Tensor3 u = slot_product(r, k12, r, k13, p2);
  CHECK(u.nonzero_count() == 1);
  CHECK(u(0, 1, 1) == 1);

  CHECK(slot_product(Tensor2(2), k12, r, k23, p2).is_zero());
  CHECK_THROWS_AS(slot_product(r, k12, r, k12, p2), DimensionError);
  CHECK_THROWS_AS(slot_product(Tensor2(3), k12, r, k13, p2), DimensionError);
}

TEST_CASE("r23 o r12 places the product in the middle slot") {
  // sum a_j (x) (a_i o b_j) (x) b_i with r = e1 (x) e2 + e2 (x) e1 on P2.
  const StructureConstants c = fixtures::p2().table(Op::circ);
  const Tensor2 r = Tensor2::from_rows({{0, 1}, {1, 0}});
  const Tensor3 t = slot_product(r, k23, r, k12, c);
  CHECK(t == oracle::slot_product(r, k23, r, k12, c));
  // Terms: (i: e1 (x) e2, j: e1 (x) e2) gives e1 (x) e1 o e2 (x) e2 = e1 (x) e2 (x) e2.
  CHECK(t(0, 1, 1) == 1);
}

TEST_CASE("slot product agrees with the naive expansion and is bilinear") {
  const SlotPair pairs[] = {k12, k13, k23};
  for (int trial = 0; trial < 6; ++trial) {
    const StructureConstants c = gen::table(3);
    const Tensor2 r = gen::tensor2(3);
    const Tensor2 s = gen::tensor2(3);
    const Tensor2 q = gen::tensor2(3);
    for (auto a : pairs)
      for (auto b : pairs) {
        if (a == b) continue;
        const Tensor3 main = slot_product(r, a, s, b, c);
        CHECK(main == oracle::slot_product(r, a, s, b, c));
        CHECK(slot_product(r + q, a, s, b, c) == main + slot_product(q, a, s, b, c));
        CHECK(slot_product(r, a, Scalar(3) * s, b, c) == Scalar(3) * main);
      }
  }
}

TEST_CASE("exchange") {
  const Tensor2 r = Tensor2::from_rows({{0, 1}, {0, 0}});
  CHECK(exchange(r) == Tensor2::from_rows({{0, 0}, {1, 0}}));
  const Tensor2 sym = Tensor2::from_rows({{1, 2}, {2, 3}});
  CHECK(exchange(sym) == sym);
  const Tensor2 skew = Tensor2::from_rows({{0, 2}, {-2, 0}});
  CHECK(exchange(skew) == Scalar(-1) * skew);
  for (int trial = 0; trial < 5; ++trial) {
    const Tensor2 t = gen::tensor2(3);
    CHECK(exchange(exchange(t)) == t);
    CHECK(tensor_to_map(exchange(t)) == tensor_to_map(t).transpose());
  }
}

TEST_CASE("tensor to map") {
  CHECK(tensor_to_map(Tensor2(2)).is_zero());
  CHECK(tensor_to_map(Tensor2::from_rows({{1, 0}, {0, 1}})) == Matrix::identity(2));
  const Matrix f = tensor_to_map(Tensor2::from_rows({{0, 1}, {0, 0}}));
  CHECK(f.column(0) == v({0, 1}));
  CHECK(f.column(1) == v({0, 0}));
}

TEST_CASE("forms from invertible maps") {
  CHECK(form_from_invertible_map(Matrix::identity(2)).gram() == Matrix::identity(2));
  CHECK(form_from_invertible_map(Scalar(2) * Matrix::identity(2)).gram() ==
        Scalar(1, 2) * Matrix::identity(2));
  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  CHECK(form_from_invertible_map(swap).gram() == swap);
  CHECK_THROWS_AS(form_from_invertible_map(Matrix(2, 2)), SingularMatrix);
  const Matrix t = Matrix::from_rows({{1, 2}, {0, 3}});
  const BilinearForm b = form_from_invertible_map(t);
  CHECK(map_from_form(b) == t);
  // B(u, v) = <T^{-1} u, v>
  const Vector u = v({1, 3}), w = v({2, -1});
  const Vector tu = t.inverse().apply(u);
  CHECK(b(u, w) == tu[0] * w[0] + tu[1] * w[1]);
}

TEST_CASE("bilinear form predicates") {
  CHECK(BilinearForm(Matrix::from_rows({{1, 2}, {2, 0}})).is_symmetric());
  CHECK(BilinearForm(Matrix::from_rows({{0, 2}, {-2, 0}})).is_skew());
  CHECK_FALSE(BilinearForm(Matrix::from_rows({{1, 2}, {2, 4}})).is_nondegenerate());
}

TEST_CASE("dual representations") {
  CHECK(dual_rep({Matrix(2, 2)}) == MatrixFamily{Matrix(2, 2)});
  CHECK(dual_rep({Matrix::identity(2)}) == MatrixFamily{Scalar(-1) * Matrix::identity(2)});
  CHECK(dual_rep({Matrix::from_rows({{0, 1}, {0, 0}})}) == MatrixFamily{Matrix::from_rows({{0, 0}, {-1, 0}})});
  const MatrixFamily rho{gen::matrix(3, 3), gen::matrix(3, 3)};
  CHECK(dual_rep(dual_rep(rho)) == rho);
  CHECK_THROWS_AS(dual_rep({Matrix(2, 2), Matrix(3, 3)}), DimensionError);
}

TEST_CASE("multiplication operators") {
  const StructureConstants c = fixtures::p2().table(Op::circ);
  const MatrixFamily l = left_multiplications(c);
  const MatrixFamily r = right_multiplications(c);
  CHECK(l[0] == Matrix::identity(2));
  CHECK(r[0] == Matrix::from_rows({{1, 0}, {0, 0}}));
  CHECK(r[1] == Matrix::from_rows({{0, 0}, {1, 0}}));
  CHECK(tensor_from_matrix(Matrix::from_rows({{1, 2}, {3, 4}})) == Tensor2::from_rows({{1, 2}, {3, 4}}));
}

#include <doctest.h>

#include "ldend/axioms.hpp"
#include "ldend/catalog.hpp"
#include "ldend/error.hpp"
#include "ldend/kernels.hpp"
#include "support/oracle.hpp"

using namespace ldend;

TEST_CASE("parallel slot product matches the serial kernel") {
  const SlotPair pairs[] = {k12, k13, k23};
  for (std::size_t n : {1u, 2u, 4u, 5u}) {
    const StructureConstants c = gen::table(n);
    const Tensor2 r = gen::tensor2(n);
    const Tensor2 s = gen::tensor2(n);
    for (auto a : pairs)
      for (auto b : pairs) {
        if (a == b) continue;
        CHECK(kernels::slot_product_parallel(r, a, s, b, c) == kernels::slot_product_serial(r, a, s, b, c));
      }
  }
}

TEST_CASE("parallel identity evaluation matches serial, failures ordered") {
  Algebra alg(4);
  alg.set(Op::circ, gen::table(4));
  const auto ids = class_identities(alg, AlgebraClass::pre_lie);
  const CheckReport serial = kernels::evaluate_serial(ids);
  const CheckReport parallel = kernels::evaluate_parallel(ids);
  CHECK(serial == parallel);
  CHECK(serial.evaluated == 64);
  for (std::size_t i = 1; i < serial.failures.size(); ++i)
    CHECK(serial.failures[i - 1].indices < serial.failures[i].indices);
}

TEST_CASE("multiple identities interleave by tuple") {
  const Algebra n2 = fixtures::n2();
  Algebra alg(2);
  alg.set(Op::bracket, n2.table(Op::circ));
  const auto ids = class_identities(alg, AlgebraClass::lie);
  const CheckReport r = kernels::evaluate_parallel(ids);
  CHECK(r == kernels::evaluate_serial(ids));
  CHECK(r.evaluated == 4 + 8);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.front().indices == std::vector<std::size_t>{1, 1});
}

TEST_CASE("tuple enumeration") {
  const std::vector<Scalar> entries{-1, 0, 1};
  const auto keep_sum_zero = [](std::span<const Scalar> t) {
    Scalar s = 0;
    for (const auto& x : t) s += x;
    return s == 0;
  };
  const auto serial = kernels::enumerate_tuples_serial(3, entries, 1000, keep_sum_zero);
  CHECK(serial == kernels::enumerate_tuples_parallel(3, entries, 1000, keep_sum_zero));
  CHECK(serial.size() == 7);
  CHECK(serial.front() == Vector{-1, 0, 1});
  CHECK(serial.back() == Vector{1, 0, -1});
  CHECK(kernels::enumerate_tuples_parallel(2, entries, 9, [](auto) { return true; }).size() == 9);
  CHECK_THROWS_AS(kernels::enumerate_tuples_parallel(2, entries, 8, [](auto) { return true; }), SearchCapExceeded);
  CHECK_THROWS_AS(kernels::enumerate_tuples_serial(200, entries, 1000000, [](auto) { return true; }),
                  SearchCapExceeded);
}

// Serial reference kernels against their OpenMP twins.

#include <benchmark/benchmark.h>

#include <random>

#include "ldend/axioms.hpp"
#include "ldend/catalog.hpp"
#include "ldend/kernels.hpp"
#include "ldend/operators.hpp"

using namespace ldend;

namespace {

std::mt19937 rng(7);

Scalar small() { return std::uniform_int_distribution<int>(-2, 2)(rng); }

StructureConstants random_table(std::size_t n) {
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.at(i, j, k) = small();
  return c;
}

Tensor2 random_tensor(std::size_t n) {
  Tensor2 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = small();
  return t;
}

template <auto Kernel>
void slot_product(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Tensor2 r = random_tensor(n);
  const StructureConstants c = random_table(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(r, k13, r, k23, c));
}

template <auto Kernel>
void quadri_check(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Algebra q(n);
  for (Op op : {Op::se, Op::ne, Op::nw, Op::sw}) q.set(op, random_table(n));
  const auto identities = class_identities(q, AlgebraClass::quadri);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(identities));
}

template <auto Kernel>
void rb_enumeration(benchmark::State& state) {
  const Algebra p2 = fixtures::p2();
  std::vector<Scalar> entries;
  for (int v = -static_cast<int>(state.range(0)); v <= state.range(0); ++v) entries.emplace_back(v);
  const kernels::TuplePredicate keep = [&](std::span<const Scalar> t) {
    return check_rota_baxter_prelie(Matrix(2, 2, {t.begin(), t.end()}), p2).passed();
  };
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(4, entries, kDefaultSearchCap, keep));
}

}  // namespace

BENCHMARK(slot_product<kernels::slot_product_serial>)->Name("slot_product/serial")->Arg(4)->Arg(8);
BENCHMARK(slot_product<kernels::slot_product_parallel>)->Name("slot_product/parallel")->Arg(4)->Arg(8);
BENCHMARK(quadri_check<kernels::evaluate_serial>)->Name("quadri_check/serial")->Arg(3)->Arg(6);
BENCHMARK(quadri_check<kernels::evaluate_parallel>)->Name("quadri_check/parallel")->Arg(3)->Arg(6);
BENCHMARK(rb_enumeration<kernels::enumerate_tuples_serial>)->Name("rb_search/serial")->Arg(1)->Arg(2);
BENCHMARK(rb_enumeration<kernels::enumerate_tuples_parallel>)->Name("rb_search/parallel")->Arg(1)->Arg(2);

BENCHMARK_MAIN();

#include "ldend/kernels.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "ldend/error.hpp"

namespace ldend::kernels {

namespace {

std::size_t tuple_count(const std::vector<std::size_t>& extents) {
  std::size_t n = 1;
  for (auto e : extents) n *= e;
  return n;
}

void decode(std::size_t flat, const std::vector<std::size_t>& extents, std::vector<std::size_t>& out) {
  out.resize(extents.size());
  for (std::size_t d = extents.size(); d-- > 0;) {
    out[d] = flat % extents[d];
    flat /= extents[d];
  }
}

std::optional<Failure> evaluate_one(const Identity& identity, std::span<const std::size_t> tuple) {
  Vector residual = identity.residual(tuple);
  if (is_zero(residual)) return std::nullopt;
  Failure f{identity.id, {}, std::move(residual)};
  f.indices.reserve(tuple.size());
  for (auto i : tuple) f.indices.push_back(i + 1);
  return f;
}

void order_failures(std::vector<Failure>& failures) {
  std::stable_sort(failures.begin(), failures.end(),
                   [](const Failure& a, const Failure& b) { return a.indices < b.indices; });
}

// Where the two pairs meet, and which index of each tensor sits there.
struct SlotLayout {
  int shared;       // 0-based output position receiving the product
  int r_other;      // 0-based output position of r's free index
  int s_other;      // 0-based output position of s's free index
  bool r_shared_first;
  bool s_shared_first;
};

SlotLayout layout(SlotPair r_slots, SlotPair s_slots) {
  auto valid = [](SlotPair p) { return p.first >= 1 && p.second <= 3 && p.first < p.second; };
  if (!valid(r_slots) || !valid(s_slots)) throw DimensionError("slot pairs must be increasing positions in 1..3");
  int shared = 0;
  int matches = 0;
  for (int a : {r_slots.first, r_slots.second})
    for (int b : {s_slots.first, s_slots.second})
      if (a == b) {
        shared = a;
        ++matches;
      }
  if (matches != 1) throw DimensionError("slot pairs must share exactly one position");
  SlotLayout l{};
  l.shared = shared - 1;
  l.r_shared_first = r_slots.first == shared;
  l.s_shared_first = s_slots.first == shared;
  l.r_other = (l.r_shared_first ? r_slots.second : r_slots.first) - 1;
  l.s_other = (l.s_shared_first ? s_slots.second : s_slots.first) - 1;
  return l;
}

void require_dims(const Tensor2& r, const Tensor2& s, const StructureConstants& table) {
  if (r.dim() != table.dim() || s.dim() != table.dim())
    throw DimensionError("slot product: tensor dimension " + std::to_string(r.dim()) + "/" +
                         std::to_string(s.dim()) + " != algebra dimension " + std::to_string(table.dim()));
}

const Scalar& entry(const Tensor2& t, bool shared_first, std::size_t shared, std::size_t other) {
  return shared_first ? t(shared, other) : t(other, shared);
}

}  // namespace

CheckReport evaluate_serial(std::span<const Identity> identities) {
  CheckReport report;
  std::vector<std::size_t> tuple;
  for (const auto& identity : identities) {
    const std::size_t total = tuple_count(identity.extents);
    for (std::size_t flat = 0; flat < total; ++flat) {
      decode(flat, identity.extents, tuple);
      if (auto f = evaluate_one(identity, tuple)) report.failures.push_back(std::move(*f));
    }
    report.evaluated += total;
  }
  order_failures(report.failures);
  return report;
}

CheckReport evaluate_parallel(std::span<const Identity> identities) {
  CheckReport report;
  for (const auto& identity : identities) {
    const std::size_t total = tuple_count(identity.extents);
    std::vector<std::optional<Failure>> slots(total);
#pragma omp parallel
    {
      std::vector<std::size_t> tuple;
#pragma omp for schedule(dynamic, 4)
      for (std::size_t flat = 0; flat < total; ++flat) {
        decode(flat, identity.extents, tuple);
        slots[flat] = evaluate_one(identity, tuple);
      }
    }
    for (auto& f : slots)
      if (f) report.failures.push_back(std::move(*f));
    report.evaluated += total;
  }
  order_failures(report.failures);
  return report;
}

Tensor3 slot_product_serial(const Tensor2& r, SlotPair r_slots, const Tensor2& s, SlotPair s_slots,
                            const StructureConstants& table) {
  const SlotLayout l = layout(r_slots, s_slots);
  require_dims(r, s, table);
  const std::size_t n = table.dim();
  Tensor3 out(n);
  std::size_t t[3];
  for (t[0] = 0; t[0] < n; ++t[0])
    for (t[1] = 0; t[1] < n; ++t[1])
      for (t[2] = 0; t[2] < n; ++t[2]) {
        Scalar sum = 0;
        for (std::size_t a = 0; a < n; ++a) {
          const Scalar& ra = entry(r, l.r_shared_first, a, t[l.r_other]);
          if (is_zero(ra)) continue;
          for (std::size_t b = 0; b < n; ++b) {
            const Scalar& sb = entry(s, l.s_shared_first, b, t[l.s_other]);
            if (is_zero(sb)) continue;
            const Scalar& c = table.at(a, b, t[l.shared]);
            if (!is_zero(c)) sum += ra * sb * c;
          }
        }
        out(t[0], t[1], t[2]) = sum;
      }
  return out;
}

Tensor3 slot_product_parallel(const Tensor2& r, SlotPair r_slots, const Tensor2& s, SlotPair s_slots,
                              const StructureConstants& table) {
  const SlotLayout l = layout(r_slots, s_slots);
  require_dims(r, s, table);
  const std::size_t n = table.dim();

  // partial[(a * n + y) * n + k] = sum_b s(b at shared, y free) * c(a, b, k)
  std::vector<Scalar> partial(n * n * n, Scalar(0));
#pragma omp parallel for schedule(static)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& sb = entry(s, l.s_shared_first, b, y);
        if (is_zero(sb)) continue;
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c = table.at(a, b, k);
          if (!is_zero(c)) partial[(a * n + y) * n + k] += sb * c;
        }
      }

  Tensor3 out(n);
#pragma omp parallel for schedule(static)
  for (std::size_t t0 = 0; t0 < n; ++t0) {
    std::size_t t[3];
    t[0] = t0;
    for (t[1] = 0; t[1] < n; ++t[1])
      for (t[2] = 0; t[2] < n; ++t[2]) {
        Scalar sum = 0;
        for (std::size_t a = 0; a < n; ++a) {
          const Scalar& ra = entry(r, l.r_shared_first, a, t[l.r_other]);
          if (is_zero(ra)) continue;
          const Scalar& p = partial[(a * n + t[l.s_other]) * n + t[l.shared]];
          if (!is_zero(p)) sum += ra * p;
        }
        out(t[0], t[1], t[2]) = sum;
      }
  }
  return out;
}

namespace {

std::size_t candidate_count(std::size_t length, std::size_t base, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (base != 0 && total > cap / base) {
      throw SearchCapExceeded("search space " + std::to_string(base) + "^" + std::to_string(length) +
                              " exceeds cap " + std::to_string(cap));
    }
    total *= base;
  }
  if (total > cap)
    throw SearchCapExceeded("search space of " + std::to_string(total) + " candidates exceeds cap " +
                            std::to_string(cap));
  return total;
}

void decode_tuple(std::size_t flat, std::span<const Scalar> entry_set, Vector& out) {
  const std::size_t base = entry_set.size();
  for (std::size_t d = out.size(); d-- > 0;) {
    out[d] = entry_set[flat % base];
    flat /= base;
  }
}

}  // namespace

std::vector<Vector> enumerate_tuples_serial(std::size_t length, std::span<const Scalar> entry_set, std::size_t cap,
                                            const TuplePredicate& keep) {
  const std::size_t total = candidate_count(length, entry_set.size(), cap);
  std::vector<Vector> found;
  if (entry_set.empty()) return found;
  Vector tuple(length);
  for (std::size_t flat = 0; flat < total; ++flat) {
    decode_tuple(flat, entry_set, tuple);
    if (keep(tuple)) found.push_back(tuple);
  }
  return found;
}

std::vector<Vector> enumerate_tuples_parallel(std::size_t length, std::span<const Scalar> entry_set,
                                              std::size_t cap, const TuplePredicate& keep) {
  const std::size_t total = candidate_count(length, entry_set.size(), cap);
  std::vector<Vector> found;
  if (entry_set.empty()) return found;
  std::vector<char> accepted(total, 0);
#pragma omp parallel
  {
    Vector tuple(length);
#pragma omp for schedule(dynamic, 64)
    for (std::size_t flat = 0; flat < total; ++flat) {
      decode_tuple(flat, entry_set, tuple);
      accepted[flat] = keep(tuple) ? 1 : 0;
    }
  }
  Vector tuple(length);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (!accepted[flat]) continue;
    decode_tuple(flat, entry_set, tuple);
    found.push_back(tuple);
  }
  return found;
}

}  // namespace ldend::kernels

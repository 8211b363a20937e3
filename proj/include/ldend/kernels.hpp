#pragma once

// Data-parallel kernels. Every OpenMP kernel has a serial twin computing
// the identical result; tests compare the two and ldend_bench times them.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ldend/algebra.hpp"
#include "ldend/core.hpp"
#include "ldend/matrix.hpp"
#include "ldend/report.hpp"
#include "ldend/tensor.hpp"

namespace ldend::kernels {

/// An identity LHS - RHS = 0 to be evaluated at every index tuple in
/// [0, extents[0]) x ... ; `residual` returns LHS - RHS at a 0-based tuple.
struct Identity {
  std::string id;
  std::vector<std::size_t> extents;
  std::function<Vector(std::span<const std::size_t>)> residual;
};

/// Failures are ordered by 1-based index tuple, then by identity position.
CheckReport evaluate_serial(std::span<const Identity> identities);
CheckReport evaluate_parallel(std::span<const Identity> identities);

Tensor3 slot_product_serial(const Tensor2& r, SlotPair r_slots, const Tensor2& s, SlotPair s_slots,
                            const StructureConstants& table);
Tensor3 slot_product_parallel(const Tensor2& r, SlotPair r_slots, const Tensor2& s, SlotPair s_slots,
                              const StructureConstants& table);

/// Enumerates every tuple of `length` entries drawn from `entry_set`, in
/// lexicographic order of positions (entry_set order per position), and
/// returns those accepted by `keep` in that order. `keep` must be safe to
/// call concurrently. Throws SearchCapExceeded when the candidate count
/// exceeds `cap`.
using TuplePredicate = std::function<bool(std::span<const Scalar>)>;
std::vector<Vector> enumerate_tuples_serial(std::size_t length, std::span<const Scalar> entry_set,
                                            std::size_t cap, const TuplePredicate& keep);
std::vector<Vector> enumerate_tuples_parallel(std::size_t length, std::span<const Scalar> entry_set,
                                              std::size_t cap, const TuplePredicate& keep);

}  // namespace ldend::kernels

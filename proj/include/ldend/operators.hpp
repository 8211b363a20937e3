#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ldend/algebra.hpp"
#include "ldend/matrix.hpp"
#include "ldend/report.hpp"
#include "ldend/representations.hpp"
#include "ldend/tensor.hpp"

namespace ldend {

/// Whether a constructor verifies its hypothesis before building.
enum class Verify { enforce, skip };

inline constexpr std::size_t kDefaultSearchCap = 1'000'000;

/// T(u) o T(v) = T(l(T(u))v + r(T(v))u) for T : V -> A.
CheckReport check_o_prelie(const LinearMap& t, const PreLieModule& m);

/// Weight-zero Rota-Baxter identity R(x) o R(y) = R(R(x) o y + x o R(y)).
CheckReport check_rota_baxter_prelie(const LinearMap& r, const Algebra& alg);

/// [T(u), T(v)] = T(rho(T(u))v - rho(T(v))u).
CheckReport check_o_lie(const LinearMap& t, const Algebra& lie, const MatrixFamily& rho);

/// Both triangle identities T(u) > T(v) = T(l_r(T(u))v + r_r(T(v))u) and
/// likewise for <.
CheckReport check_o_ldend(const LinearMap& t, const LDendModule& m);

/// T(u o' v) = T(u) o T(v) where o' is the vertical product of `on_v` and o
/// is base's circ.
CheckReport check_vertical_homomorphism(const LinearMap& t, const Algebra& on_v, const Algebra& base);

struct InducedLDend {
  /// u > v = l(T(u))v, u < v = -r(T(u))v on V.
  Algebra on_v;
  /// The same structure transported to T(V), present when T is injective;
  /// coordinates are taken in the basis T(v_1), ..., T(v_m).
  std::optional<Algebra> on_image;
  /// Columns span T(V) in A-coordinates (the matrix of T) when on_image is set.
  std::optional<Matrix> image_basis;
};

/// L-dendriform structure on the module space of an O-operator.
/// Throws PreconditionFailed unless check_o_prelie passes (Verify::enforce).
InducedLDend ldend_from_o_prelie(const LinearMap& t, const PreLieModule& m, Verify verify = Verify::enforce);

/// x > y = R(x) o y, x < y = -(y o R(x)).
Algebra ldend_from_rb(const LinearMap& r, const Algebra& alg, Verify verify = Verify::enforce);

/// x o y = [R(x), y] for an O-operator R of (g, ad).
Algebra prelie_from_o_lie(const LinearMap& r, const Algebra& lie, Verify verify = Verify::enforce);

/// x > y = [R1(R2(x)), y], x < y = [R2(x), R1(y)] for commuting O-operators
/// of (g, ad).
Algebra ldend_from_commuting_pair(const LinearMap& r1, const LinearMap& r2, const Algebra& lie,
                                  Verify verify = Verify::enforce);

/// x > y = T(l(x)T^{-1}(y)), x < y = -T(r(x)T^{-1}(y)); the vertical product
/// of the result is the base's circ. Throws SingularMatrix for non-square or
/// singular T.
Algebra compatible_ldend_from_invertible_o(const LinearMap& t, const PreLieModule& m,
                                           Verify verify = Verify::enforce);

/// Compatible L-dendriform structure of a pre-Lie algebra with a
/// nondegenerate symmetric 2-cocycle B:
///   B(x > y, z) = -B(y, [x, z]),  B(x < y, z) = -B(y, z o x).
/// Each system is solved with one inverse Gram matrix.
Algebra ldend_from_2cocycle(const Algebra& alg, const BilinearForm& form, Verify verify = Verify::enforce);

/// Every square matrix over `entry_set` that is a Rota-Baxter operator of
/// weight zero on (alg, circ), in lexicographic row-major order.
std::vector<LinearMap> search_rb(const Algebra& alg, std::span<const Scalar> entry_set,
                                 std::size_t cap = kDefaultSearchCap);

/// Every symmetric Gram matrix over `entry_set` (upper triangle enumerated
/// row-major) that is a 2-cocycle of (alg, circ); optionally only the
/// nondegenerate ones. The cocycle condition is linear, so it is reduced to
/// a constraint matrix once and each candidate is a matrix-vector test.
std::vector<BilinearForm> search_symmetric_cocycles(const Algebra& alg, std::span<const Scalar> entry_set,
                                                    bool nondegenerate_only = true,
                                                    std::size_t cap = kDefaultSearchCap);

/// Sorted, deduplicated copy of an entry set.
std::vector<Scalar> normalize_entry_set(std::span<const Scalar> entry_set);

}  // namespace ldend

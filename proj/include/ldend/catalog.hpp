#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ldend/algebra.hpp"
#include "ldend/matrix.hpp"
#include "ldend/representations.hpp"

namespace ldend::fixtures {

// Small verified examples. Indices in comments are 1-based.

/// dim 2, all products zero (carries circ).
Algebra z2();
/// dim 1, e1 o e1 = e1.
Algebra p1();
/// dim 2, e1 o e1 = e1, e1 o e2 = e2.
Algebra p2();
/// dim 2, e1 o e1 = e2, e1 o e2 = e1; not pre-Lie.
Algebra n2();
/// dim 2, [e1, e2] = e2.
Algebra l2();
/// Rota-Baxter operator on p2: e1 -> 0, e2 -> e1.
LinearMap rb2();
/// e2 > e1 = e1, e2 > e2 = e2, e2 < e1 = -e1.
Algebra ld2();
/// Dendriform on p2 from rb2: x succ y = R(x) o y, x prec y = x o R(y).
Algebra d2();
/// Quadri-algebra on p2 from rb2 commuting with itself:
/// x ne y = x sw y = R(x) o R(y), se = nw = 0.
Algebra q2();
/// dim 2, all four quadri arrows zero.
Algebra q0();

struct Fixture {
  std::string name;
  /// "algebra", "map" or "module".
  std::string kind;
  /// Class or relation the fixture is declared to satisfy, e.g. "pre_lie",
  /// "rota_baxter:P2", "prelie_module".
  std::string declared;
  nlohmann::json document;

  std::string file_name() const;
};

std::vector<std::string> catalog_names();
/// Case-insensitive. Throws FormatError for unknown names.
Fixture catalog(std::string_view name);

}  // namespace ldend::fixtures

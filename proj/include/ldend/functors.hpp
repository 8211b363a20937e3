#pragma once

#include <string_view>

#include "ldend/algebra.hpp"

namespace ldend {

// Table-level constructions between algebra classes. None of these verify
// that the input belongs to its class; compose with check_class for that.
// Outputs carry a class tag recording how they were produced.

/// [x, y] = x o y - y o x, read from the `from` table (circ by default).
Algebra sub_adjacent_lie(const Algebra& alg, Op from = Op::circ);

/// x . y = x > y + x < y, as `bullet`.
Algebra horizontal_prelie(const Algebra& alg);

/// x o y = x > y - y < x, as `circ`.
Algebra vertical_prelie(const Algebra& alg);

/// > unchanged, x <' y = -(y < x).
Algebra transpose(const Algebra& alg);

/// Renames succ -> tri_r, prec -> tri_l.
Algebra dendriform_to_ldend(const Algebra& alg);

/// Products derivable from a quadri-algebra's four arrows.
enum class QuadriDerived {
  succ_prec,   // x succ y = ne + se, x prec y = nw + sw
  vee_wedge,   // vee = se + sw, wedge = ne + nw
  star,        // sum of all four
  l_dendriform,// x > y = x se y - y nw x, x < y = x ne y - y sw x
  circ,        // x se y + x sw y - y nw x - y ne x
  bullet,      // x se y + x ne y - y nw x - y sw x
  bracket,     // commutator of star
};

std::string_view quadri_derived_name(QuadriDerived which);
/// Accepts "succ", "prec", "vee", "wedge", "star", "tri_r", "tri_l", "circ",
/// "bullet", "bracket". Throws FormatError.
QuadriDerived parse_quadri_derived(std::string_view name);

Algebra quadri_derive(const Algebra& alg, QuadriDerived which);

/// Algebra of the same dimension whose only table is `circ`, copied from
/// `from`. Lets a horizontal product serve as the base of a pre-Lie module.
Algebra as_prelie(const Algebra& alg, Op from);

}  // namespace ldend

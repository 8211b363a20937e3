#include "ldend/functors.hpp"

#include <string>

#include "ldend/error.hpp"

namespace ldend {

namespace {

using SC = StructureConstants;

Algebra single(std::size_t dim, Op op, SC table, std::string tag) {
  Algebra out(dim, std::move(tag));
  out.set(op, std::move(table));
  return out;
}

struct Arrows {
  SC se, ne, nw, sw;
};

Arrows arrows(const Algebra& alg) {
  alg.require({Op::se, Op::ne, Op::nw, Op::sw});
  return {alg.table(Op::se), alg.table(Op::ne), alg.table(Op::nw), alg.table(Op::sw)};
}

}  // namespace

Algebra sub_adjacent_lie(const Algebra& alg, Op from) {
  return single(alg.dim(), Op::bracket, alg.table(from).commutator(), "lie");
}

Algebra horizontal_prelie(const Algebra& alg) {
  return single(alg.dim(), Op::bullet, alg.table(Op::tri_r) + alg.table(Op::tri_l), "pre_lie");
}

Algebra vertical_prelie(const Algebra& alg) {
  return single(alg.dim(), Op::circ, alg.table(Op::tri_r) - alg.table(Op::tri_l).opposite(), "pre_lie");
}

Algebra transpose(const Algebra& alg) {
  Algebra out(alg.dim(), "l_dendriform");
  out.set(Op::tri_r, alg.table(Op::tri_r));
  out.set(Op::tri_l, -alg.table(Op::tri_l).opposite());
  return out;
}

Algebra dendriform_to_ldend(const Algebra& alg) {
  Algebra out(alg.dim(), "l_dendriform");
  out.set(Op::tri_r, alg.table(Op::succ));
  out.set(Op::tri_l, alg.table(Op::prec));
  return out;
}

std::string_view quadri_derived_name(QuadriDerived which) {
  switch (which) {
    case QuadriDerived::succ_prec: return "succ_prec";
    case QuadriDerived::vee_wedge: return "vee_wedge";
    case QuadriDerived::star: return "star";
    case QuadriDerived::l_dendriform: return "l_dendriform";
    case QuadriDerived::circ: return "circ";
    case QuadriDerived::bullet: return "bullet";
    case QuadriDerived::bracket: return "bracket";
  }
  return "?";
}

QuadriDerived parse_quadri_derived(std::string_view name) {
  if (name == "succ" || name == "prec" || name == "succ_prec") return QuadriDerived::succ_prec;
  if (name == "vee" || name == "wedge" || name == "vee_wedge") return QuadriDerived::vee_wedge;
  if (name == "star") return QuadriDerived::star;
  if (name == "tri_r" || name == "tri_l" || name == "l_dendriform") return QuadriDerived::l_dendriform;
  if (name == "circ") return QuadriDerived::circ;
  if (name == "bullet") return QuadriDerived::bullet;
  if (name == "bracket") return QuadriDerived::bracket;
  throw FormatError("--functor", "unknown quadri-derived product \"" + std::string(name) + "\"");
}

Algebra quadri_derive(const Algebra& alg, QuadriDerived which) {
  const Arrows a = arrows(alg);
  const std::size_t n = alg.dim();
  switch (which) {
    case QuadriDerived::succ_prec: {
      Algebra out(n, "dendriform");
      out.set(Op::succ, a.ne + a.se);
      out.set(Op::prec, a.nw + a.sw);
      return out;
    }
    case QuadriDerived::vee_wedge: {
      Algebra out(n, "dendriform");
      out.set(Op::vee, a.se + a.sw);
      out.set(Op::wedge, a.ne + a.nw);
      return out;
    }
    case QuadriDerived::star:
      return single(n, Op::star, a.se + a.ne + a.nw + a.sw, "associative");
    case QuadriDerived::l_dendriform: {
      Algebra out(n, "l_dendriform");
      out.set(Op::tri_r, a.se - a.nw.opposite());
      out.set(Op::tri_l, a.ne - a.sw.opposite());
      return out;
    }
    case QuadriDerived::circ:
      return single(n, Op::circ, a.se + a.sw - a.nw.opposite() - a.ne.opposite(), "pre_lie");
    case QuadriDerived::bullet:
      return single(n, Op::bullet, a.se + a.ne - a.nw.opposite() - a.sw.opposite(), "pre_lie");
    case QuadriDerived::bracket:
      return single(n, Op::bracket, (a.se + a.ne + a.nw + a.sw).commutator(), "lie");
  }
  return Algebra(n);
}

Algebra as_prelie(const Algebra& alg, Op from) {
  return single(alg.dim(), Op::circ, alg.table(from), alg.class_tag().value_or("pre_lie"));
}

}  // namespace ldend

#include "ldend/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "ldend/error.hpp"
#include "ldend/io.hpp"

namespace ldend::fixtures {

namespace {

Algebra with_table(std::size_t dim, Op op, std::initializer_list<TableEntry> entries,
                   std::optional<std::string> tag) {
  Algebra alg(dim, std::move(tag));
  alg.set(op, make_table(dim, entries));
  return alg;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

Algebra z2() { return with_table(2, Op::circ, {}, "pre_lie"); }

Algebra p1() { return with_table(1, Op::circ, {{0, 0, 0, 1}}, "pre_lie"); }

Algebra p2() { return with_table(2, Op::circ, {{0, 0, 0, 1}, {0, 1, 1, 1}}, "pre_lie"); }

Algebra n2() { return with_table(2, Op::circ, {{0, 0, 1, 1}, {0, 1, 0, 1}}, std::nullopt); }

Algebra l2() { return with_table(2, Op::bracket, {{0, 1, 1, 1}, {1, 0, 1, -1}}, "lie"); }

LinearMap rb2() { return Matrix::from_rows({{0, 1}, {0, 0}}); }

Algebra ld2() {
  Algebra alg(2, "l_dendriform");
  alg.set(Op::tri_r, make_table(2, {{1, 0, 0, 1}, {1, 1, 1, 1}}));
  alg.set(Op::tri_l, make_table(2, {{1, 0, 0, -1}}));
  return alg;
}

Algebra d2() {
  // R(e2) = e1: e2 succ e1 = e1, e2 succ e2 = e2, e1 prec e2 = e1.
  Algebra alg(2, "dendriform");
  alg.set(Op::succ, make_table(2, {{1, 0, 0, 1}, {1, 1, 1, 1}}));
  alg.set(Op::prec, make_table(2, {{0, 1, 0, 1}}));
  return alg;
}

Algebra q2() {
  Algebra alg(2, "quadri");
  alg.set(Op::se, make_table(2, {}));
  alg.set(Op::ne, make_table(2, {{1, 1, 0, 1}}));
  alg.set(Op::nw, make_table(2, {}));
  alg.set(Op::sw, make_table(2, {{1, 1, 0, 1}}));
  return alg;
}

Algebra q0() {
  Algebra alg(2, "quadri");
  for (Op op : {Op::se, Op::ne, Op::nw, Op::sw}) alg.set(op, make_table(2, {}));
  return alg;
}

std::string Fixture::file_name() const {
  const std::string stem = lower(name);
  if (kind == "map") return stem + ".map.json";
  if (kind == "module") return stem + ".mod.json";
  return stem + ".alg.json";
}

std::vector<std::string> catalog_names() {
  return {"Z2", "P1", "P2", "N2", "L2", "RB2", "LD2", "D2", "Q2", "Q0", "P2-REGULAR", "LD2-REGULAR"};
}

Fixture catalog(std::string_view name) {
  const std::string key = lower(name);
  if (key == "z2") return {"Z2", "algebra", "pre_lie", io::to_json(z2())};
  if (key == "p1") return {"P1", "algebra", "pre_lie", io::to_json(p1())};
  if (key == "p2") return {"P2", "algebra", "pre_lie", io::to_json(p2())};
  if (key == "n2") return {"N2", "algebra", "not:pre_lie", io::to_json(n2())};
  if (key == "l2") return {"L2", "algebra", "lie", io::to_json(l2())};
  if (key == "rb2") return {"RB2", "map", "rota_baxter:P2", io::to_json(rb2())};
  if (key == "ld2") return {"LD2", "algebra", "l_dendriform", io::to_json(ld2())};
  if (key == "d2") return {"D2", "algebra", "dendriform", io::to_json(d2())};
  if (key == "q2") return {"Q2", "algebra", "quadri", io::to_json(q2())};
  if (key == "q0") return {"Q0", "algebra", "quadri", io::to_json(q0())};
  if (key == "p2-regular")
    return {"P2-REGULAR", "module", "prelie_module", io::to_json(regular_prelie_module(p2()))};
  if (key == "ld2-regular")
    return {"LD2-REGULAR", "module", "ldend_module", io::to_json(regular_ldend_module(ld2()))};
  throw FormatError("catalog", "unknown fixture \"" + std::string(name) + "\"");
}

}  // namespace ldend::fixtures

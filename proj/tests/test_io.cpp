#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ldend/catalog.hpp"
#include "ldend/error.hpp"
#include "ldend/io.hpp"
#include "ldend/ybe.hpp"
#include "support/oracle.hpp"

using namespace ldend;
using ldend::io::json;

namespace {

std::string where_of(auto&& f) {
  try {
    f();
  } catch (const FormatError& e) {
    return e.where();
  }
  return "<no error>";
}

json doc(std::string_view text) { return io::parse(text, "test"); }

}  // namespace

TEST_CASE("algebra files round-trip canonically") {
  for (const Algebra& a : {fixtures::p2(), fixtures::n2(), fixtures::ld2(), fixtures::q2(), fixtures::d2()}) {
    const json j = io::to_json(a);
    const Algebra back = io::algebra_from_json(j);
    CHECK(back == a);
    CHECK(io::dump(io::to_json(back)) == io::dump(j));
  }
  CHECK(io::dump(io::to_json(fixtures::p2())) ==
        "{\"class_tag\":\"pre_lie\",\"dim\":2,\"ops\":{\"circ\":[[1,1,1,\"1\"],[1,2,2,\"1\"]]}}\n");
}

TEST_CASE("writers reduce fractions and sort entries") {
  const Algebra a = io::algebra_from_json(doc(R"({"dim":2,"ops":{"circ":[[2,2,1,"6/4"],[1,1,1,-3],[1,2,1,"0"]]}})"));
  CHECK(io::dump(io::to_json(a)) == "{\"dim\":2,\"ops\":{\"circ\":[[1,1,1,\"-3\"],[2,2,1,\"3/2\"]]}}\n");
}

TEST_CASE("random tables round-trip") {
  for (int round = 0; round < 10; ++round) {
    Algebra a(3);
    a.set(Op::tri_r, gen::table(3, -3, 3));
    a.set(Op::tri_l, gen::table(3, -3, 3));
    CHECK(io::algebra_from_json(io::parse(io::dump(io::to_json(a)), "x")) == a);
    const Matrix m = gen::matrix(2, 3);
    CHECK(io::matrix_from_json(io::to_json(m)) == m);
    const Tensor2 t = gen::tensor2(3);
    CHECK(io::tensor2_from_json(io::to_json(t)) == t);
  }
}

TEST_CASE("tensor, form and module files") {
  Tensor3 t(2);
  t(0, 1, 1) = Scalar(1, 3);
  CHECK(io::dump(io::to_json(t)) == "{\"dim\":2,\"entries\":[[1,2,2,\"1/3\"]],\"rank\":3}\n");
  CHECK(io::tensor3_from_json(io::to_json(t)) == t);
  CHECK(io::to_json(Tensor2(2))["rank"] == 2);
  CHECK_THROWS_AS(io::tensor2_from_json(io::to_json(t)), FormatError);

  const BilinearForm b(Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(io::dump(io::to_json(b)) == "{\"gram\":{\"cols\":2,\"entries\":[[1,2,\"1\"],[2,1,\"1\"]],\"rows\":2}}\n");
  CHECK(io::form_from_json(io::to_json(b)) == b);

  const PreLieModule pm = regular_prelie_module(fixtures::p2());
  CHECK(io::module_kind(io::to_json(pm)) == io::ModuleKind::pre_lie);
  CHECK(io::prelie_module_from_json(io::to_json(pm)) == pm);
  const LDendModule lm = regular_ldend_module(fixtures::ld2());
  CHECK(io::module_kind(io::to_json(lm)) == io::ModuleKind::l_dendriform);
  CHECK(io::ldend_module_from_json(io::to_json(lm)) == lm);
  const LieModule ad = adjoint_module(fixtures::l2());
  CHECK(io::module_kind(io::to_json(ad)) == io::ModuleKind::lie);
  CHECK(io::lie_module_from_json(io::to_json(ad)) == ad);
  CHECK_THROWS_AS(io::module_kind(doc(R"({"base":{},"vdim":1})")), FormatError);
}

TEST_CASE("malformed algebra files name the offending field") {
  CHECK(where_of([] { io::algebra_from_json(doc(R"({"ops":{}})")); }) == "dim");
  CHECK(where_of([] { io::algebra_from_json(doc(R"({"dim":0,"ops":{}})")); }) == "dim");
  CHECK(where_of([] { io::algebra_from_json(doc(R"({"dim":2,"ops":{},"extra":1})")); }) == "extra");
  CHECK(where_of([] { io::algebra_from_json(doc(R"({"dim":2,"ops":{"times":[]}})")); }).starts_with("ops"));
  CHECK(where_of([] { io::algebra_from_json(doc(R"({"dim":2,"ops":{"circ":[[1,3,1,"1"]]}})")); }) ==
        "ops.circ[0][1]");
  CHECK(where_of([] { io::algebra_from_json(doc(R"({"dim":2,"ops":{"circ":[[1,1,1,"1.5"]]}})")); }) ==
        "ops.circ[0][3]");
  CHECK(where_of([] { io::algebra_from_json(doc(R"({"dim":2,"ops":{"circ":[[1,1,"1"]]}})")); }) == "ops.circ[0]");
  CHECK(where_of([] {
          io::algebra_from_json(doc(R"({"dim":2,"ops":{"circ":[[1,1,1,"1"],[1,1,1,"2"]]}})"));
        }) == "ops.circ[1]");
  CHECK(where_of([] { io::algebra_from_json(doc(R"({"dim":2,"ops":{"circ":[[1,1,1,1.5]]}})")); }) ==
        "ops.circ[0][3]");
}

TEST_CASE("malformed maps and modules") {
  CHECK(where_of([] { io::matrix_from_json(doc(R"({"rows":2,"entries":[]})")); }) == "cols");
  CHECK(where_of([] { io::matrix_from_json(doc(R"({"rows":2,"cols":2,"entries":[[0,1,"1"]]})")); }) ==
        "entries[0][0]");
  const std::string bad_module =
      R"({"base":{"dim":1,"ops":{"circ":[]}},"vdim":1,"l":[{"rows":2,"cols":2,"entries":[]}],"r":[{"rows":1,"cols":1,"entries":[]}]})";
  CHECK(where_of([&] { io::prelie_module_from_json(doc(bad_module)); }) == "l[0]");
  CHECK(where_of([&] { io::prelie_module_from_json(doc(R"({"base":{"dim":1,"ops":{}},"vdim":1,"l":[{"rows":1,"cols":1,"entries":[]}]})")); }) == "r");
}

TEST_CASE("syntax errors carry a position") {
  CHECK(where_of([] { io::parse("{\n  \"dim\": 2,\n  oops\n}", "broken.json"); }).starts_with("broken.json:3:"));
  CHECK_THROWS_AS(io::read_file("/nonexistent/path.json"), FormatError);
}

TEST_CASE("reports") {
  CheckReport r;
  r.evaluated = 8;
  r.failures.push_back({"eq-2.2", {1, 2, 1}, {0, Scalar(-1, 2)}});
  CHECK(io::dump(io::to_json(r)) ==
        "{\"evaluated\":8,\"failures\":[{\"identity\":\"eq-2.2\",\"indices\":[1,2,1],\"residual\":[\"0\",\"-1/2\"]}],"
        "\"passed\":false}\n");
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "ldend_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "ld2.alg.json";
  io::write_file(path, io::to_json(fixtures::ld2()));
  CHECK(io::algebra_from_json(io::read_file(path)) == fixtures::ld2());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == io::dump(io::to_json(fixtures::ld2())));
  std::filesystem::remove_all(dir);
}

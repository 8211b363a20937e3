#include "ldend/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <sstream>
#include <vector>

#include "ldend/axioms.hpp"
#include "ldend/catalog.hpp"
#include "ldend/error.hpp"
#include "ldend/functors.hpp"
#include "ldend/io.hpp"
#include "ldend/operators.hpp"
#include "ldend/representations.hpp"
#include "ldend/ybe.hpp"

namespace ldend::cli {

namespace {

using io::json;
namespace fs = std::filesystem;

struct Options {
  std::string klass;
  std::string equation;
  std::string functor;
  std::string module_path;
  std::string form_path;
  std::string entry_set = "-1,0,1";
  std::string out_path;
  std::vector<std::string> maps;
  std::vector<std::string> inputs;
  std::size_t cap = kDefaultSearchCap;
  bool json = false;
  bool force = false;
};

json load(const std::string& path) { return io::read_file(path); }

template <typename F>
auto with_path(const std::string& path, F decode) {
  const json doc = load(path);
  try {
    return decode(doc);
  } catch (const FormatError& e) {
    throw FormatError(path, e.what());
  }
}

Algebra load_algebra(const std::string& path) {
  return with_path(path, [](const json& d) { return io::algebra_from_json(d); });
}
Matrix load_map(const std::string& path) {
  return with_path(path, [](const json& d) { return io::matrix_from_json(d); });
}
Tensor2 load_tensor2(const std::string& path) {
  return with_path(path, [](const json& d) { return io::tensor2_from_json(d); });
}
BilinearForm load_form(const std::string& path) {
  return with_path(path, [](const json& d) { return io::form_from_json(d); });
}

struct AnyModule {
  io::ModuleKind kind;
  std::optional<PreLieModule> pre_lie;
  std::optional<LDendModule> l_dendriform;
  std::optional<LieModule> lie;
};

AnyModule load_module(const std::string& path) {
  return with_path(path, [](const json& d) {
    AnyModule m{io::module_kind(d), {}, {}, {}};
    switch (m.kind) {
      case io::ModuleKind::pre_lie: m.pre_lie = io::prelie_module_from_json(d); break;
      case io::ModuleKind::l_dendriform: m.l_dendriform = io::ldend_module_from_json(d); break;
      case io::ModuleKind::lie: m.lie = io::lie_module_from_json(d); break;
    }
    return m;
  });
}

std::vector<Scalar> parse_entry_set(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw FormatError("--entry-set", "empty entry");
    try {
      out.push_back(parse_scalar(item.substr(b, e - b + 1)));
    } catch (const FormatError& err) {
      throw FormatError("--entry-set", err.what());
    }
  }
  if (out.empty()) throw FormatError("--entry-set", "no entries");
  return out;
}

std::string tuple_text(const std::vector<std::size_t>& indices) {
  std::string s = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
  return s + ")";
}

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_scalar(v[i]);
  return s + "]";
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    s += (i ? ", " : "") + vector_text(row);
  }
  return s + "]";
}

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  // Prints a report and returns its exit status.
  int report(const std::string& command, const std::string& label, const CheckReport& r) {
    if (opt_.json) {
      json line = io::to_json(r);
      line["command"] = command;
      line["subject"] = label;
      out_ << io::dump(line);
    } else if (r.passed()) {
      out_ << "PASS " << label << " (" << r.evaluated << " evaluations)\n";
    } else {
      out_ << "FAIL " << label << ": " << r.failures.size() << " of " << r.evaluated << " evaluations\n";
      for (const auto& f : r.failures)
        out_ << "  " << f.identity << " at " << tuple_text(f.indices) << ": residual " << vector_text(f.residual)
             << "\n";
    }
    return r.passed() ? kExitOk : kExitCheckFailed;
  }

  // Writes a document to --out, or to stdout.
  void emit(const json& doc) {
    if (opt_.out_path.empty()) {
      out_ << io::dump(doc);
    } else {
      io::write_file(opt_.out_path, doc);
      if (!opt_.json) out_ << "wrote " << opt_.out_path << "\n";
    }
  }

  Verify verify() const { return opt_.force ? Verify::skip : Verify::enforce; }

  const Options& opt() const { return opt_; }
  std::ostream& out() { return out_; }

 private:
  const Options& opt_;
  std::ostream& out_;
};

const std::string& single_input(const Options& opt, const char* what) {
  if (opt.inputs.size() != 1) throw FormatError("arguments", std::string("expected one ") + what + " file");
  return opt.inputs.front();
}

const std::string& single_map(const Options& opt) {
  if (opt.maps.size() != 1) throw FormatError("--map", "expected exactly one --map");
  return opt.maps.front();
}

void require_flag(const std::string& value, const char* flag) {
  if (value.empty()) throw FormatError(flag, "required for this command");
}

int cmd_check(Session& s) {
  const Options& o = s.opt();
  const std::string& path = single_input(o, "input");
  if (o.klass == "prelie_module" || o.klass == "ldend_module") {
    const AnyModule m = load_module(path);
    if (o.klass == "prelie_module") {
      if (!m.pre_lie) throw FormatError(path, "not a pre-Lie module file (needs l and r)");
      return s.report("check", o.klass, check_prelie_module(*m.pre_lie));
    }
    if (!m.l_dendriform) throw FormatError(path, "not an L-dendriform module file (needs l_r, r_r, l_l, r_l)");
    return s.report("check", o.klass, check_ldend_module(*m.l_dendriform));
  }
  if (o.klass == "prelie_cocycle" || o.klass == "ldend_cocycle") {
    require_flag(o.form_path, "--form");
    const Algebra alg = load_algebra(path);
    const BilinearForm form = load_form(o.form_path);
    return s.report("check", o.klass,
                    o.klass == "prelie_cocycle" ? check_prelie_cocycle(alg, form) : check_ldend_cocycle(alg, form));
  }
  const AlgebraClass c = parse_class(o.klass);
  return s.report("check", o.klass, check_class(load_algebra(path), c));
}

Op bracket_source(const Algebra& alg) {
  for (Op op : {Op::circ, Op::bullet, Op::star})
    if (alg.has(op)) return op;
  throw MissingOperation("sub_adjacent_lie needs a circ, bullet or star table");
}

int cmd_derive(Session& s) {
  const Options& o = s.opt();
  const std::string& path = single_input(o, "input");
  const std::string& f = o.functor;
  if (f == "dual_module" || f == "semidirect") {
    const AnyModule m = load_module(path);
    if (m.pre_lie) {
      s.emit(f == "dual_module" ? io::to_json(dual_prelie_module(*m.pre_lie))
                                : io::to_json(semidirect_prelie(*m.pre_lie)));
    } else if (m.l_dendriform) {
      s.emit(f == "dual_module" ? io::to_json(dual_ldend_module(*m.l_dendriform))
                                : io::to_json(semidirect_ldend(*m.l_dendriform)));
    } else {
      throw FormatError("--functor", f + " is not defined for Lie modules");
    }
    return kExitOk;
  }
  const Algebra alg = load_algebra(path);
  if (f == "sub_adjacent_lie") {
    s.emit(io::to_json(sub_adjacent_lie(alg, bracket_source(alg))));
  } else if (f == "horizontal_prelie") {
    s.emit(io::to_json(horizontal_prelie(alg)));
  } else if (f == "vertical_prelie") {
    s.emit(io::to_json(vertical_prelie(alg)));
  } else if (f == "transpose") {
    s.emit(io::to_json(transpose(alg)));
  } else if (f == "dendriform_to_ldend") {
    s.emit(io::to_json(dendriform_to_ldend(alg)));
  } else if (f.rfind("quadri:", 0) == 0) {
    s.emit(io::to_json(quadri_derive(alg, parse_quadri_derived(f.substr(7)))));
  } else if (f == "regular_prelie_module") {
    s.emit(io::to_json(regular_prelie_module(alg)));
  } else if (f == "regular_ldend_module") {
    s.emit(io::to_json(regular_ldend_module(alg)));
  } else if (f == "adjoint_module") {
    s.emit(io::to_json(adjoint_module(alg)));
  } else if (f == "horizontal_module") {
    s.emit(io::to_json(horizontal_module(alg)));
  } else if (f == "vertical_module") {
    s.emit(io::to_json(vertical_module(alg)));
  } else {
    throw FormatError("--functor", "unknown functor \"" + f + "\"");
  }
  return kExitOk;
}

int cmd_oop_check(Session& s) {
  const Options& o = s.opt();
  require_flag(o.module_path, "--module");
  const Matrix t = load_map(single_map(o));
  const AnyModule m = load_module(o.module_path);
  if (m.pre_lie) return s.report("oop-check", "pre_lie O-operator", check_o_prelie(t, *m.pre_lie));
  if (m.l_dendriform) return s.report("oop-check", "l_dendriform O-operator", check_o_ldend(t, *m.l_dendriform));
  validate(*m.lie);
  return s.report("oop-check", "lie O-operator", check_o_lie(t, m.lie->base, m.lie->rho));
}

int cmd_rb_check(Session& s) {
  const Options& o = s.opt();
  const Algebra alg = load_algebra(single_input(o, "algebra"));
  return s.report("rb-check", "rota_baxter", check_rota_baxter_prelie(load_map(single_map(o)), alg));
}

int cmd_lift(Session& s) {
  const Options& o = s.opt();
  require_flag(o.form_path, "--form");
  const Algebra alg = load_algebra(single_input(o, "algebra"));
  s.emit(io::to_json(ldend_from_2cocycle(alg, load_form(o.form_path), s.verify())));
  return kExitOk;
}

int cmd_induce(Session& s) {
  const Options& o = s.opt();
  if (!o.module_path.empty()) {
    if (!o.inputs.empty()) throw FormatError("arguments", "give either --module or an algebra file, not both");
    const AnyModule m = load_module(o.module_path);
    if (!m.pre_lie) throw FormatError(o.module_path, "induce needs a pre-Lie module (l and r)");
    const Matrix t = load_map(single_map(o));
    if (o.functor == "compatible") {
      s.emit(io::to_json(compatible_ldend_from_invertible_o(t, *m.pre_lie, s.verify())));
    } else if (o.functor.empty()) {
      s.emit(io::to_json(ldend_from_o_prelie(t, *m.pre_lie, s.verify()).on_v));
    } else {
      throw FormatError("--functor", "induce accepts only \"compatible\" with --module");
    }
    return kExitOk;
  }
  if (!o.functor.empty()) throw FormatError("--functor", "only meaningful together with --module");
  const Algebra alg = load_algebra(single_input(o, "algebra"));
  if (o.maps.size() == 2) {
    s.emit(io::to_json(ldend_from_commuting_pair(load_map(o.maps[0]), load_map(o.maps[1]), alg, s.verify())));
    return kExitOk;
  }
  const Matrix r = load_map(single_map(o));
  if (alg.has(Op::circ)) {
    s.emit(io::to_json(ldend_from_rb(r, alg, s.verify())));
  } else if (alg.has(Op::bracket)) {
    s.emit(io::to_json(prelie_from_o_lie(r, alg, s.verify())));
  } else {
    throw MissingOperation("induce needs an algebra with circ (Rota-Baxter) or bracket (O-operator of ad)");
  }
  return kExitOk;
}

int cmd_search_rb(Session& s) {
  const Options& o = s.opt();
  const Algebra alg = load_algebra(single_input(o, "algebra"));
  const auto found = search_rb(alg, parse_entry_set(o.entry_set), o.cap);
  if (o.json) {
    for (const auto& m : found) s.out() << io::dump(io::to_json(m));
  } else {
    s.out() << found.size() << " Rota-Baxter operators\n";
    for (const auto& m : found) s.out() << "  " << matrix_text(m) << "\n";
  }
  return kExitOk;
}

int cmd_verify_eq(Session& s) {
  const Options& o = s.opt();
  if (o.inputs.size() != 2) throw FormatError("arguments", "expected an algebra file and a tensor file");
  const Algebra alg = load_algebra(o.inputs[0]);
  const Tensor2 r = load_tensor2(o.inputs[1]);
  const Equation eq = parse_equation(o.equation);
  const Tensor3 res = residual(alg, r, eq);
  const auto first = res.first_nonzero();
  const std::string id(equation_id(eq));
  if (o.json) {
    json line{{"command", "verify-eq"}, {"equation", id}, {"nonzero", res.nonzero_count()}, {"first", nullptr}};
    if (first)
      line["first"] = {{"indices", {first->i + 1, first->j + 1, first->k + 1}},
                       {"value", format_scalar(first->value)}};
    s.out() << io::dump(line);
  } else if (!first) {
    s.out() << id << ": residual is zero\n";
  } else {
    s.out() << id << ": " << res.nonzero_count() << " nonzero residual entries, first at "
            << tuple_text({first->i + 1, first->j + 1, first->k + 1}) << " = " << format_scalar(first->value)
            << "\n";
  }
  return first ? kExitCheckFailed : kExitOk;
}

int cmd_build_solution(Session& s) {
  const Options& o = s.opt();
  require_flag(o.module_path, "--module");
  const Matrix t = load_map(single_map(o));
  const AnyModule m = load_module(o.module_path);
  Solution sol;
  if (m.pre_lie)
    sol = build_s_solution(*m.pre_lie, t);
  else if (m.l_dendriform)
    sol = build_ld_solution(*m.l_dendriform, t);
  else
    throw FormatError(o.module_path, "build-solution needs a pre-Lie or L-dendriform module");
  if (o.out_path.empty()) {
    s.out() << io::dump(io::to_json(sol.algebra)) << io::dump(io::to_json(sol.r));
  } else {
    const std::string alg_path = o.out_path + ".alg.json";
    const std::string r_path = o.out_path + ".tensor.json";
    io::write_file(alg_path, io::to_json(sol.algebra));
    io::write_file(r_path, io::to_json(sol.r));
    if (!o.json) s.out() << "wrote " << alg_path << " and " << r_path << "\n";
  }
  return kExitOk;
}

// Verifies a fixture against its declared class or relation.
CheckReport verify_fixture(const fixtures::Fixture& f) {
  const std::string& d = f.declared;
  if (d == "rota_baxter:P2") return check_rota_baxter_prelie(fixtures::rb2(), fixtures::p2());
  if (d == "prelie_module") return check_prelie_module(io::prelie_module_from_json(f.document));
  if (d == "ldend_module") return check_ldend_module(io::ldend_module_from_json(f.document));
  const Algebra alg = io::algebra_from_json(f.document);
  if (d.rfind("not:", 0) == 0) {
    CheckReport r = check_class(alg, parse_class(d.substr(4)));
    CheckReport inverted;
    inverted.evaluated = r.evaluated;
    if (r.passed()) inverted.failures.push_back({d, {}, {}});
    return inverted;
  }
  return check_class(alg, parse_class(d));
}

int cmd_catalog(Session& s) {
  const Options& o = s.opt();
  const std::vector<std::string> names = o.inputs.empty() ? fixtures::catalog_names() : o.inputs;
  std::vector<fixtures::Fixture> list;
  for (const auto& n : names) list.push_back(fixtures::catalog(n));
  if (o.out_path.empty()) {
    for (const auto& f : list) {
      if (o.json)
        s.out() << io::dump({{"name", f.name}, {"kind", f.kind}, {"declared", f.declared}, {"file", f.file_name()}});
      else
        s.out() << f.name << "  " << f.kind << "  " << f.declared << "  " << f.file_name() << "\n";
    }
    return kExitOk;
  }
  fs::create_directories(o.out_path);
  int status = kExitOk;
  for (const auto& f : list) {
    const CheckReport r = verify_fixture(f);
    if (!r.passed()) {
      status = s.report("catalog", f.name + " as " + f.declared, r);
      continue;
    }
    const fs::path path = fs::path(o.out_path) / f.file_name();
    io::write_file(path, f.document);
    if (o.json)
      s.out() << io::dump({{"command", "catalog"}, {"name", f.name}, {"file", path.string()}});
    else
      s.out() << "wrote " << path.string() << " (" << f.declared << " verified)\n";
  }
  return status;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact workbench for pre-Lie, L-dendriform and related algebras", "ldend"};
  app.require_subcommand(1);

  const auto common = [&o](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON-lines output"); };
  const auto inputs = [&o](CLI::App* sub, const char* what) { sub->add_option("inputs", o.inputs, what); };
  const auto out_opt = [&o](CLI::App* sub, const char* what) { sub->add_option("--out", o.out_path, what); };
  const auto force = [&o](CLI::App* sub) {
    sub->add_flag("--force", o.force, "build without verifying the hypothesis");
  };

  auto* check = app.add_subcommand("check", "verify the axioms of a class");
  check->add_option("--class", o.klass,
                    "pre_lie, lie, associative, dendriform, l_dendriform, quadri, prelie_module, "
                    "ldend_module, prelie_cocycle, ldend_cocycle")
      ->required();
  check->add_option("--form", o.form_path, "bilinear form file (cocycle classes)");
  inputs(check, "algebra or module file");
  common(check);

  auto* derive = app.add_subcommand("derive", "apply a functor to an algebra or module");
  derive->add_option("--functor", o.functor, "functor name")->required();
  inputs(derive, "algebra or module file");
  out_opt(derive, "output file (default stdout)");
  common(derive);

  auto* oop = app.add_subcommand("oop-check", "check an O-operator against a module");
  oop->add_option("--map", o.maps, "linear map file")->allow_extra_args(false)->required();
  oop->add_option("--module", o.module_path, "module file")->required();
  common(oop);

  auto* rb = app.add_subcommand("rb-check", "check a weight-zero Rota-Baxter operator");
  rb->add_option("--map", o.maps, "linear map file")->allow_extra_args(false)->required();
  inputs(rb, "pre-Lie algebra file");
  common(rb);

  auto* lift = app.add_subcommand("lift", "compatible L-dendriform structure from a 2-cocycle");
  lift->add_option("--form", o.form_path, "symmetric nondegenerate 2-cocycle")->required();
  inputs(lift, "pre-Lie algebra file");
  out_opt(lift, "output file (default stdout)");
  force(lift);
  common(lift);

  auto* induce = app.add_subcommand("induce", "structure induced by O-operators or Rota-Baxter operators");
  induce->add_option("--map", o.maps, "operator file; give two for a commuting pair")->allow_extra_args(false)->required();
  induce->add_option("--module", o.module_path, "pre-Lie module the operator acts on");
  induce->add_option("--functor", o.functor, "\"compatible\" for an invertible O-operator");
  inputs(induce, "algebra file (without --module)");
  out_opt(induce, "output file (default stdout)");
  force(induce);
  common(induce);

  auto* search = app.add_subcommand("search-rb", "exhaustive search for Rota-Baxter operators");
  search->add_option("--entry-set", o.entry_set, "comma-separated rationals (default -1,0,1)");
  search->add_option("--cap", o.cap, "maximum number of candidates");
  inputs(search, "pre-Lie algebra file");
  common(search);

  auto* verify = app.add_subcommand("verify-eq", "residual of a tensor equation");
  verify->add_option("--equation", o.equation, "eq-2.9, eq-2.9-alt, eq-4.8 ... eq-4.14")->required();
  inputs(verify, "algebra file and tensor file");
  common(verify);

  auto* build = app.add_subcommand("build-solution", "solution of the S- or LD-equation from an operator");
  build->add_option("--module", o.module_path, "pre-Lie or L-dendriform module")->required();
  build->add_option("--map", o.maps, "operator V -> A")->allow_extra_args(false)->required();
  out_opt(build, "output prefix; writes PREFIX.alg.json and PREFIX.tensor.json");
  common(build);

  auto* cat = app.add_subcommand("catalog", "list or write the verified fixtures");
  inputs(cat, "fixture names (default all)");
  out_opt(cat, "directory to write fixture files into");
  common(cat);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session session(o, out);
  try {
    if (*check) return cmd_check(session);
    if (*derive) return cmd_derive(session);
    if (*oop) return cmd_oop_check(session);
    if (*rb) return cmd_rb_check(session);
    if (*lift) return cmd_lift(session);
    if (*induce) return cmd_induce(session);
    if (*search) return cmd_search_rb(session);
    if (*verify) return cmd_verify_eq(session);
    if (*build) return cmd_build_solution(session);
    if (*cat) return cmd_catalog(session);
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << "\n";
    session.report("precondition", e.what(), e.report());
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ldend::cli

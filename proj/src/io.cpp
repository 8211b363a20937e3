#include "ldend/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ldend/error.hpp"

namespace ldend::io {

namespace {

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string at_index(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

void require_object(const json& doc, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!doc.is_object()) throw FormatError(where, "expected an object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) throw FormatError(join(where, key), "unknown field");
  }
}

const json& field(const json& doc, const std::string& where, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(join(where, key), "missing field");
  return *it;
}

std::size_t positive(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) throw FormatError(where, "expected a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

std::size_t index(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer()) throw FormatError(where, "expected an integer index");
  const long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > bound)
    throw FormatError(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
  return static_cast<std::size_t>(i - 1);
}

Scalar scalar(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const FormatError& e) {
      throw FormatError(where, e.what());
    }
  }
  if (v.is_number_integer()) return parse_scalar(v.dump());
  throw FormatError(where, "expected a rational string such as \"-3/4\" or an integer");
}

json scalar_json(const Scalar& s) { return format_scalar(s); }

// Sparse entry lists: each entry has `arity` 1-based indices then a value.
template <typename Store>
void read_entries(const json& list, std::size_t arity, const std::vector<std::size_t>& bounds,
                  const std::string& where, Store store) {
  if (!list.is_array()) throw FormatError(where, "expected an array of entries");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string here = at_index(where, e);
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != arity + 1)
      throw FormatError(here, "expected " + std::to_string(arity) + " indices and a value");
    std::vector<std::size_t> idx(arity);
    for (std::size_t a = 0; a < arity; ++a) idx[a] = index(entry[a], bounds[a], at_index(here, a));
    if (!seen.insert(idx).second) throw FormatError(here, "duplicate entry");
    store(idx, scalar(entry[arity], at_index(here, arity)));
  }
}

json table_json(const StructureConstants& c) {
  json list = json::array();
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(c.at(i, j, k))) list.push_back({i + 1, j + 1, k + 1, scalar_json(c.at(i, j, k))});
  return list;
}

json family_json(const MatrixFamily& family) {
  json list = json::array();
  for (const auto& m : family) list.push_back(to_json(m));
  return list;
}

MatrixFamily family_from_json(const json& doc, const std::string& where) {
  if (!doc.is_array()) throw FormatError(where, "expected an array of matrices");
  MatrixFamily out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(matrix_from_json(doc[i], at_index(where, i)));
  return out;
}

void check_family(const MatrixFamily& f, std::size_t count, std::size_t vdim, const std::string& where) {
  if (f.size() != count)
    throw FormatError(where, "expected " + std::to_string(count) + " matrices, got " + std::to_string(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].rows() != vdim || f[i].cols() != vdim)
      throw FormatError(at_index(where, i), "expected a " + std::to_string(vdim) + "x" + std::to_string(vdim) +
                                                " matrix");
}

std::pair<Algebra, std::size_t> module_header(const json& doc, const std::string& where) {
  Algebra base = algebra_from_json(field(doc, where, "base"), join(where, "base"));
  const std::size_t vdim = positive(field(doc, where, "vdim"), join(where, "vdim"));
  return {std::move(base), vdim};
}

MatrixFamily module_family(const json& doc, const std::string& where, const char* key, std::size_t count,
                           std::size_t vdim) {
  MatrixFamily f = family_from_json(field(doc, where, key), join(where, key));
  check_family(f, count, vdim, join(where, key));
  return f;
}

}  // namespace

json to_json(const Algebra& alg) {
  json doc;
  doc["dim"] = alg.dim();
  json ops = json::object();
  for (const auto& [op, table] : alg.tables()) ops[std::string(op_name(op))] = table_json(table);
  doc["ops"] = std::move(ops);
  if (alg.class_tag()) doc["class_tag"] = *alg.class_tag();
  return doc;
}

Algebra algebra_from_json(const json& doc, const std::string& where) {
  require_object(doc, where, {"dim", "ops", "class_tag"});
  const std::size_t n = positive(field(doc, where, "dim"), join(where, "dim"));
  Algebra alg(n);
  if (const auto it = doc.find("class_tag"); it != doc.end()) {
    if (!it->is_string()) throw FormatError(join(where, "class_tag"), "expected a string");
    alg.set_class_tag(it->get<std::string>());
  }
  const json& ops = field(doc, where, "ops");
  const std::string ops_where = join(where, "ops");
  if (!ops.is_object()) throw FormatError(ops_where, "expected an object of tables");
  for (const auto& [name, list] : ops.items()) {
    const std::string here = join(ops_where, name);
    Op op;
    try {
      op = parse_op(name);
    } catch (const FormatError& e) {
      throw FormatError(here, e.what());
    }
    StructureConstants table(n);
    read_entries(list, 3, {n, n, n}, here,
                 [&](const std::vector<std::size_t>& i, Scalar v) { table.at(i[0], i[1], i[2]) = std::move(v); });
    alg.set(op, std::move(table));
  }
  return alg;
}

json to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) entries.push_back({i + 1, j + 1, scalar_json(m(i, j))});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& doc, const std::string& where) {
  require_object(doc, where, {"rows", "cols", "entries"});
  const std::size_t rows = positive(field(doc, where, "rows"), join(where, "rows"));
  const std::size_t cols = positive(field(doc, where, "cols"), join(where, "cols"));
  Matrix m(rows, cols);
  read_entries(field(doc, where, "entries"), 2, {rows, cols}, join(where, "entries"),
               [&](const std::vector<std::size_t>& i, Scalar v) { m(i[0], i[1]) = std::move(v); });
  return m;
}

json to_json(const Tensor2& t) {
  json entries = json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (!is_zero(t(i, j))) entries.push_back({i + 1, j + 1, scalar_json(t(i, j))});
  return {{"dim", t.dim()}, {"rank", 2}, {"entries", std::move(entries)}};
}

json to_json(const Tensor3& t) {
  json entries = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(t(i, j, k))) entries.push_back({i + 1, j + 1, k + 1, scalar_json(t(i, j, k))});
  return {{"dim", n}, {"rank", 3}, {"entries", std::move(entries)}};
}

namespace {

std::size_t tensor_header(const json& doc, const std::string& where, int rank) {
  require_object(doc, where, {"dim", "rank", "entries"});
  const std::size_t n = positive(field(doc, where, "dim"), join(where, "dim"));
  const json& r = field(doc, where, "rank");
  if (!r.is_number_integer() || r.get<long long>() != rank)
    throw FormatError(join(where, "rank"), "expected rank " + std::to_string(rank));
  return n;
}

}  // namespace

Tensor2 tensor2_from_json(const json& doc, const std::string& where) {
  const std::size_t n = tensor_header(doc, where, 2);
  Tensor2 t(n);
  read_entries(field(doc, where, "entries"), 2, {n, n}, join(where, "entries"),
               [&](const std::vector<std::size_t>& i, Scalar v) { t(i[0], i[1]) = std::move(v); });
  return t;
}

Tensor3 tensor3_from_json(const json& doc, const std::string& where) {
  const std::size_t n = tensor_header(doc, where, 3);
  Tensor3 t(n);
  read_entries(field(doc, where, "entries"), 3, {n, n, n}, join(where, "entries"),
               [&](const std::vector<std::size_t>& i, Scalar v) { t(i[0], i[1], i[2]) = std::move(v); });
  return t;
}

json to_json(const BilinearForm& form) { return {{"gram", to_json(form.gram())}}; }

BilinearForm form_from_json(const json& doc, const std::string& where) {
  require_object(doc, where, {"gram"});
  Matrix g = matrix_from_json(field(doc, where, "gram"), join(where, "gram"));
  if (!g.square()) throw FormatError(join(where, "gram"), "Gram matrix must be square");
  return BilinearForm(std::move(g));
}

json to_json(const PreLieModule& m) {
  return {{"base", to_json(m.base)}, {"vdim", m.vdim}, {"l", family_json(m.l)}, {"r", family_json(m.r)}};
}

json to_json(const LDendModule& m) {
  return {{"base", to_json(m.base)},        {"vdim", m.vdim},
          {"l_r", family_json(m.l_r)},      {"r_r", family_json(m.r_r)},
          {"l_l", family_json(m.l_l)},      {"r_l", family_json(m.r_l)}};
}

json to_json(const LieModule& m) {
  return {{"base", to_json(m.base)}, {"vdim", m.vdim}, {"rho", family_json(m.rho)}};
}

PreLieModule prelie_module_from_json(const json& doc, const std::string& where) {
  require_object(doc, where, {"base", "vdim", "l", "r"});
  auto [base, vdim] = module_header(doc, where);
  const std::size_t n = base.dim();
  PreLieModule m{std::move(base), vdim, module_family(doc, where, "l", n, vdim),
                 module_family(doc, where, "r", n, vdim)};
  return m;
}

LDendModule ldend_module_from_json(const json& doc, const std::string& where) {
  require_object(doc, where, {"base", "vdim", "l_r", "r_r", "l_l", "r_l"});
  auto [base, vdim] = module_header(doc, where);
  const std::size_t n = base.dim();
  LDendModule m{std::move(base),
                vdim,
                module_family(doc, where, "l_r", n, vdim),
                module_family(doc, where, "r_r", n, vdim),
                module_family(doc, where, "l_l", n, vdim),
                module_family(doc, where, "r_l", n, vdim)};
  return m;
}

LieModule lie_module_from_json(const json& doc, const std::string& where) {
  require_object(doc, where, {"base", "vdim", "rho"});
  auto [base, vdim] = module_header(doc, where);
  const std::size_t n = base.dim();
  return {std::move(base), vdim, module_family(doc, where, "rho", n, vdim)};
}

ModuleKind module_kind(const json& doc) {
  if (!doc.is_object()) throw FormatError("", "module file must be an object");
  if (doc.contains("l_r") || doc.contains("r_r") || doc.contains("l_l") || doc.contains("r_l"))
    return ModuleKind::l_dendriform;
  if (doc.contains("rho")) return ModuleKind::lie;
  if (doc.contains("l") || doc.contains("r")) return ModuleKind::pre_lie;
  throw FormatError("", "module file needs l/r, l_r/r_r/l_l/r_l or rho families");
}

json to_json(const Vector& v) {
  json list = json::array();
  for (const auto& s : v) list.push_back(scalar_json(s));
  return list;
}

json to_json(const CheckReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"identity", f.identity}, {"indices", f.indices}, {"residual", to_json(f.residual)}});
  return {{"passed", report.passed()}, {"evaluated", report.evaluated}, {"failures", std::move(failures)}};
}

std::string dump(const json& doc) { return doc.dump() + "\n"; }

json parse(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(col), "invalid JSON");
  }
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

void write_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path.string(), "cannot write file");
  out << dump(doc);
  if (!out) throw FormatError(path.string(), "write failed");
}

}  // namespace ldend::io

#include "ldend/operators.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "ldend/axioms.hpp"
#include "ldend/core.hpp"
#include "ldend/error.hpp"
#include "ldend/functors.hpp"
#include "ldend/kernels.hpp"

namespace ldend {

namespace {

using kernels::Identity;
using Tuple = std::span<const std::size_t>;
using SC = StructureConstants;

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_map_shape(const LinearMap& t, std::size_t rows, std::size_t cols, const char* what) {
  if (t.rows() != rows || t.cols() != cols)
    throw DimensionError(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                         ", got " + dims(t));
}

void enforce(const CheckReport& report, const std::string& what) {
  if (!report.passed()) throw PreconditionFailed(what, report);
}

// R(x) o R(y) - R(R(x) o y + x o R(y)) at basis pair (i, j).
Vector rb_residual(const LinearMap& r, const SC& c, std::size_t i, std::size_t j) {
  const Vector rx = r.column(i);
  const Vector ry = r.column(j);
  const Vector ei = unit_vector(c.dim(), i);
  const Vector ej = unit_vector(c.dim(), j);
  return c.product(rx, ry) - r.apply(c.product(rx, ej) + c.product(ei, ry));
}

Algebra from_tables(std::size_t dim, SC right, SC left) {
  Algebra out(dim, "l_dendriform");
  out.set(Op::tri_r, std::move(right));
  out.set(Op::tri_l, std::move(left));
  return out;
}

// Stores M(k, j) at table (i, j, k): M is the left action of e_i.
void store_left_action(SC& table, std::size_t i, const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t k = 0; k < m.rows(); ++k) table.at(i, j, k) = m(k, j);
}

CheckReport commuting_report(const LinearMap& r1, const LinearMap& r2) {
  CheckReport report;
  report.evaluated = 1;
  const Matrix diff = r1 * r2 - r2 * r1;
  if (!diff.is_zero()) {
    Vector residual;
    for (std::size_t i = 0; i < diff.rows(); ++i)
      for (std::size_t j = 0; j < diff.cols(); ++j) residual.push_back(diff(i, j));
    report.failures.push_back({"commuting-pair", {}, std::move(residual)});
  }
  return report;
}

CheckReport form_shape_report(const BilinearForm& form) {
  CheckReport report;
  const Matrix& g = form.gram();
  const std::size_t n = form.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ++report.evaluated;
      if (g(i, j) != g(j, i)) report.failures.push_back({"form-symmetry", {i + 1, j + 1}, {g(i, j) - g(j, i)}});
    }
  ++report.evaluated;
  if (!form.is_nondegenerate()) report.failures.push_back({"form-nondegenerate", {}, {Scalar(0)}});
  return report;
}

// Reduced row echelon form; returns the nonzero rows.
std::vector<Vector> independent_rows(std::vector<Vector> rows, std::size_t width) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar lead = rows[rank][col];
    for (auto& v : rows[rank]) v /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || is_zero(rows[r][col])) continue;
      const Scalar f = rows[r][col];
      axpy(rows[r], -f, rows[rank]);
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

CheckReport check_o_prelie(const LinearMap& t, const PreLieModule& m) {
  validate(m);
  require_map_shape(t, m.base.dim(), m.vdim, "O-operator");
  auto mod = std::make_shared<const PreLieModule>(m);
  auto tt = std::make_shared<const LinearMap>(t);
  auto c = std::make_shared<const SC>(m.base.table(Op::circ));
  const std::vector<Identity> ids{{"eq-2.10", {m.vdim, m.vdim}, [mod, tt, c](Tuple p) {
                                     const Vector tu = tt->column(p[0]);
                                     const Vector tv = tt->column(p[1]);
                                     const Vector inner = evaluate(mod->l, tu).column(p[1]) +
                                                          evaluate(mod->r, tv).column(p[0]);
                                     return c->product(tu, tv) - tt->apply(inner);
                                   }}};
  return kernels::evaluate_parallel(ids);
}

CheckReport check_rota_baxter_prelie(const LinearMap& r, const Algebra& alg) {
  require_map_shape(r, alg.dim(), alg.dim(), "Rota-Baxter operator");
  auto rr = std::make_shared<const LinearMap>(r);
  auto c = std::make_shared<const SC>(alg.table(Op::circ));
  const std::vector<Identity> ids{
      {"eq-2.11", {alg.dim(), alg.dim()}, [rr, c](Tuple p) { return rb_residual(*rr, *c, p[0], p[1]); }}};
  return kernels::evaluate_parallel(ids);
}

CheckReport check_o_lie(const LinearMap& t, const Algebra& lie, const MatrixFamily& rho) {
  const std::size_t vdim = t.cols();
  require_map_shape(t, lie.dim(), vdim, "O-operator");
  require_family_shape(rho, lie.dim(), vdim, "rho");
  auto fam = std::make_shared<const MatrixFamily>(rho);
  auto tt = std::make_shared<const LinearMap>(t);
  auto b = std::make_shared<const SC>(lie.table(Op::bracket));
  const std::vector<Identity> ids{{"eq-3.13", {vdim, vdim}, [fam, tt, b](Tuple p) {
                                     const Vector tu = tt->column(p[0]);
                                     const Vector tv = tt->column(p[1]);
                                     const Vector inner =
                                         evaluate(*fam, tu).column(p[1]) - evaluate(*fam, tv).column(p[0]);
                                     return b->product(tu, tv) - tt->apply(inner);
                                   }}};
  return kernels::evaluate_parallel(ids);
}

CheckReport check_o_ldend(const LinearMap& t, const LDendModule& m) {
  validate(m);
  require_map_shape(t, m.base.dim(), m.vdim, "O-operator");
  auto mod = std::make_shared<const LDendModule>(m);
  auto tt = std::make_shared<const LinearMap>(t);
  auto right = std::make_shared<const SC>(m.base.table(Op::tri_r));
  auto left = std::make_shared<const SC>(m.base.table(Op::tri_l));
  auto identity = [tt](std::string id, std::shared_ptr<const SC> table, const MatrixFamily* l,
                       const MatrixFamily* r, std::shared_ptr<const LDendModule> keep, std::size_t vdim) {
    return Identity{std::move(id), {vdim, vdim}, [tt, table, l, r, keep](Tuple p) {
                      const Vector tu = tt->column(p[0]);
                      const Vector tv = tt->column(p[1]);
                      const Vector inner = evaluate(*l, tu).column(p[1]) + evaluate(*r, tv).column(p[0]);
                      return table->product(tu, tv) - tt->apply(inner);
                    }};
  };
  const std::vector<Identity> ids{identity("eq-4.7-tri-r", right, &mod->l_r, &mod->r_r, mod, m.vdim),
                                  identity("eq-4.7-tri-l", left, &mod->l_l, &mod->r_l, mod, m.vdim)};
  return kernels::evaluate_parallel(ids);
}

CheckReport check_vertical_homomorphism(const LinearMap& t, const Algebra& on_v, const Algebra& base) {
  require_map_shape(t, base.dim(), on_v.dim(), "homomorphism");
  auto tt = std::make_shared<const LinearMap>(t);
  auto vertical = std::make_shared<const SC>(vertical_prelie(on_v).table(Op::circ));
  auto c = std::make_shared<const SC>(base.table(Op::circ));
  const std::vector<Identity> ids{{"vertical-homomorphism", {on_v.dim(), on_v.dim()}, [=](Tuple p) {
                                     return tt->apply(vertical->product(p[0], p[1])) -
                                            c->product(tt->column(p[0]), tt->column(p[1]));
                                   }}};
  return kernels::evaluate_parallel(ids);
}

InducedLDend ldend_from_o_prelie(const LinearMap& t, const PreLieModule& m, Verify verify) {
  if (verify == Verify::enforce) enforce(check_o_prelie(t, m), "map is not an O-operator of the module");
  validate(m);
  require_map_shape(t, m.base.dim(), m.vdim, "O-operator");
  const std::size_t n = m.vdim;
  SC right(n), left(n);
  for (std::size_t u = 0; u < n; ++u) {
    const Vector tu = t.column(u);
    store_left_action(right, u, evaluate(m.l, tu));
    store_left_action(left, u, -evaluate(m.r, tu));
  }
  InducedLDend out{from_tables(n, std::move(right), std::move(left)), std::nullopt, std::nullopt};
  if (t.rank() == n) {
    out.on_image = out.on_v;
    out.image_basis = t;
  }
  return out;
}

Algebra ldend_from_rb(const LinearMap& r, const Algebra& alg, Verify verify) {
  if (verify == Verify::enforce)
    enforce(check_rota_baxter_prelie(r, alg), "map is not a Rota-Baxter operator of weight zero");
  require_map_shape(r, alg.dim(), alg.dim(), "Rota-Baxter operator");
  const SC& c = alg.table(Op::circ);
  const std::size_t n = alg.dim();
  SC right(n), left(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector rx = r.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = unit_vector(n, j);
      const Vector gt = c.product(rx, ej);
      const Vector lt = c.product(ej, rx);
      for (std::size_t k = 0; k < n; ++k) {
        right.at(i, j, k) = gt[k];
        left.at(i, j, k) = -lt[k];
      }
    }
  }
  return from_tables(n, std::move(right), std::move(left));
}

Algebra prelie_from_o_lie(const LinearMap& r, const Algebra& lie, Verify verify) {
  const SC& b = lie.table(Op::bracket);
  if (verify == Verify::enforce)
    enforce(check_o_lie(r, lie, left_multiplications(b)), "map is not an O-operator of (g, ad)");
  require_map_shape(r, lie.dim(), lie.dim(), "O-operator");
  const std::size_t n = lie.dim();
  SC c(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector rx = r.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = b.product(rx, unit_vector(n, j));
      for (std::size_t k = 0; k < n; ++k) c.at(i, j, k) = v[k];
    }
  }
  Algebra out(n, "pre_lie");
  out.set(Op::circ, std::move(c));
  return out;
}

Algebra ldend_from_commuting_pair(const LinearMap& r1, const LinearMap& r2, const Algebra& lie, Verify verify) {
  const SC& b = lie.table(Op::bracket);
  const std::size_t n = lie.dim();
  require_map_shape(r1, n, n, "first O-operator");
  require_map_shape(r2, n, n, "second O-operator");
  if (verify == Verify::enforce) {
    const MatrixFamily ad = left_multiplications(b);
    enforce(check_o_lie(r1, lie, ad), "first map is not an O-operator of (g, ad)");
    enforce(check_o_lie(r2, lie, ad), "second map is not an O-operator of (g, ad)");
    enforce(commuting_report(r1, r2), "the two O-operators do not commute");
  }
  const LinearMap r12 = r1 * r2;
  SC right(n), left(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector a = r12.column(i);
    const Vector bx = r2.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector gt = b.product(a, unit_vector(n, j));
      const Vector lt = b.product(bx, r1.column(j));
      for (std::size_t k = 0; k < n; ++k) {
        right.at(i, j, k) = gt[k];
        left.at(i, j, k) = lt[k];
      }
    }
  }
  return from_tables(n, std::move(right), std::move(left));
}

Algebra compatible_ldend_from_invertible_o(const LinearMap& t, const PreLieModule& m, Verify verify) {
  validate(m);
  if (!t.square() || t.rows() != m.base.dim() || t.cols() != m.vdim)
    throw SingularMatrix("O-operator must be square and invertible, got " + dims(t));
  if (verify == Verify::enforce) enforce(check_o_prelie(t, m), "map is not an O-operator of the module");
  const Matrix t_inv = t.inverse();
  const std::size_t n = m.base.dim();
  SC right(n), left(n);
  for (std::size_t i = 0; i < n; ++i) {
    store_left_action(right, i, t * m.l[i] * t_inv);
    store_left_action(left, i, -(t * m.r[i] * t_inv));
  }
  return from_tables(n, std::move(right), std::move(left));
}

Algebra ldend_from_2cocycle(const Algebra& alg, const BilinearForm& form, Verify verify) {
  if (form.dim() != alg.dim())
    throw DimensionError("bilinear form has dimension " + std::to_string(form.dim()) + ", algebra has " +
                         std::to_string(alg.dim()));
  if (verify == Verify::enforce) {
    enforce(form_shape_report(form), "form is not symmetric and nondegenerate");
    enforce(check_prelie_cocycle(alg, form), "form is not a 2-cocycle");
  }
  const SC& c = alg.table(Op::circ);
  const SC br = c.commutator();
  const std::size_t n = alg.dim();
  // B(w, z) = (G^T w)_z, so w = (G^T)^{-1} rhs.
  const Matrix solve = form.gram().transpose().inverse();
  SC right(n), left(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = unit_vector(n, j);
      Vector rhs_r(n), rhs_l(n);
      for (std::size_t z = 0; z < n; ++z) {
        rhs_r[z] = -form(ej, br.product(i, z));
        rhs_l[z] = -form(ej, c.product(z, i));
      }
      const Vector wr = solve.apply(rhs_r);
      const Vector wl = solve.apply(rhs_l);
      for (std::size_t k = 0; k < n; ++k) {
        right.at(i, j, k) = wr[k];
        left.at(i, j, k) = wl[k];
      }
    }
  return from_tables(n, std::move(right), std::move(left));
}

std::vector<Scalar> normalize_entry_set(std::span<const Scalar> entry_set) {
  std::vector<Scalar> out(entry_set.begin(), entry_set.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LinearMap> search_rb(const Algebra& alg, std::span<const Scalar> entry_set, std::size_t cap) {
  const std::vector<Scalar> entries = normalize_entry_set(entry_set);
  const SC c = alg.table(Op::circ);
  const std::size_t n = alg.dim();
  const auto keep = [&c, n](std::span<const Scalar> tuple) {
    const LinearMap r(n, n, Vector(tuple.begin(), tuple.end()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(rb_residual(r, c, i, j))) return false;
    return true;
  };
  std::vector<LinearMap> out;
  for (auto& tuple : kernels::enumerate_tuples_parallel(n * n, entries, cap, keep))
    out.emplace_back(n, n, std::move(tuple));
  return out;
}

std::vector<BilinearForm> search_symmetric_cocycles(const Algebra& alg, std::span<const Scalar> entry_set,
                                                    bool nondegenerate_only, std::size_t cap) {
  const std::vector<Scalar> entries = normalize_entry_set(entry_set);
  const SC& c = alg.table(Op::circ);
  const std::size_t n = alg.dim();
  const std::size_t width = n * (n + 1) / 2;
  std::vector<std::size_t> var(n * n);
  for (std::size_t a = 0, v = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b, ++v) var[a * n + b] = var[b * n + a] = v;

  // Row for the cocycle condition at (x, y, z) = (e_i, e_j, e_k):
  // B(x o y, z) - B(x, y o z) - B(y o x, z) + B(y, x o z).
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(width);
        for (std::size_t a = 0; a < n; ++a) {
          row[var[a * n + k]] += c.at(i, j, a);
          row[var[i * n + a]] -= c.at(j, k, a);
          row[var[a * n + k]] -= c.at(j, i, a);
          row[var[j * n + a]] += c.at(i, k, a);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  const std::vector<Vector> constraints = independent_rows(std::move(rows), width);

  const auto gram_of = [n, &var](std::span<const Scalar> tuple) {
    Matrix g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g(a, b) = tuple[var[a * n + b]];
    return g;
  };
  const auto keep = [&](std::span<const Scalar> tuple) {
    for (const auto& row : constraints) {
      Scalar s = 0;
      for (std::size_t v = 0; v < width; ++v)
        if (!is_zero(row[v])) s += row[v] * tuple[v];
      if (!is_zero(s)) return false;
    }
    return !nondegenerate_only || !is_zero(gram_of(tuple).determinant());
  };
  std::vector<BilinearForm> out;
  for (const auto& tuple : kernels::enumerate_tuples_parallel(width, entries, cap, keep))
    out.emplace_back(gram_of(tuple));
  return out;
}

}  // namespace ldend

#include "ldend/algebra.hpp"

#include <string>
#include <utility>

#include "ldend/error.hpp"

namespace ldend {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::circ: return "circ";
    case Op::bullet: return "bullet";
    case Op::tri_r: return "tri_r";
    case Op::tri_l: return "tri_l";
    case Op::succ: return "succ";
    case Op::prec: return "prec";
    case Op::se: return "se";
    case Op::ne: return "ne";
    case Op::nw: return "nw";
    case Op::sw: return "sw";
    case Op::bracket: return "bracket";
    case Op::star: return "star";
    case Op::vee: return "vee";
    case Op::wedge: return "wedge";
  }
  return "?";
}

Op parse_op(std::string_view name) {
  for (Op op : kAllOps)
    if (op_name(op) == name) return op;
  throw FormatError("", "unknown operation name \"" + std::string(name) + "\"");
}

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), data_(dim * dim * dim, Scalar(0)) {}

Vector StructureConstants::product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = at(i, j, k);
  return v;
}

Vector StructureConstants::product(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionError("product: operand length differs from dimension " + std::to_string(dim_));
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (ldend::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (ldend::is_zero(y[j])) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = at(i, j, k);
        if (!ldend::is_zero(c)) out[k] += w * c;
      }
    }
  }
  return out;
}

StructureConstants StructureConstants::opposite() const {
  StructureConstants t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) t.at(i, j, k) = at(j, i, k);
  return t;
}

StructureConstants StructureConstants::commutator() const { return *this - opposite(); }

bool StructureConstants::is_zero() const {
  for (const auto& x : data_)
    if (!ldend::is_zero(x)) return false;
  return true;
}

StructureConstants& StructureConstants::operator+=(const StructureConstants& other) {
  if (dim_ != other.dim_) throw DimensionError("table sum: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

StructureConstants& StructureConstants::operator-=(const StructureConstants& other) {
  if (dim_ != other.dim_) throw DimensionError("table difference: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

StructureConstants operator+(StructureConstants a, const StructureConstants& b) { return a += b; }
StructureConstants operator-(StructureConstants a, const StructureConstants& b) { return a -= b; }
StructureConstants operator-(const StructureConstants& a) { return StructureConstants(a.dim()) - a; }

Algebra::Algebra(std::size_t dim, std::optional<std::string> class_tag)
    : dim_(dim), class_tag_(std::move(class_tag)) {
  if (dim == 0) throw DimensionError("algebra dimension must be positive");
}

const StructureConstants& Algebra::table(Op op) const {
  auto it = ops_.find(op);
  if (it == ops_.end()) throw MissingOperation("algebra has no \"" + std::string(op_name(op)) + "\" table");
  return it->second;
}

Algebra& Algebra::set(Op op, StructureConstants table) {
  if (table.dim() != dim_)
    throw DimensionError("table for \"" + std::string(op_name(op)) + "\" has dimension " +
                         std::to_string(table.dim()) + ", algebra has " + std::to_string(dim_));
  ops_[op] = std::move(table);
  return *this;
}

Algebra& Algebra::set_class_tag(std::optional<std::string> tag) {
  class_tag_ = std::move(tag);
  return *this;
}

void Algebra::require(std::initializer_list<Op> ops) const {
  for (Op op : ops) (void)table(op);
}

StructureConstants make_table(std::size_t dim, const std::vector<TableEntry>& entries) {
  StructureConstants t(dim);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) throw DimensionError("make_table: index out of range");
    t.at(e.i, e.j, e.k) += e.value;
  }
  return t;
}

}  // namespace ldend

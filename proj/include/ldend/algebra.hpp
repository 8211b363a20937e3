#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldend/scalar.hpp"

namespace ldend {

/// Closed vocabulary of binary operations an algebra may carry.
enum class Op {
  circ,     // pre-Lie product
  bullet,   // horizontal pre-Lie product
  tri_r,    // L-dendriform right triangle
  tri_l,    // L-dendriform left triangle
  succ,     // dendriform
  prec,     // dendriform
  se,       // quadri arrows
  ne,
  nw,
  sw,
  bracket,  // Lie bracket
  star,     // associative product
  vee,
  wedge,
};

inline constexpr std::array<Op, 14> kAllOps = {
    Op::circ, Op::bullet, Op::tri_r, Op::tri_l, Op::succ, Op::prec, Op::se,
    Op::ne,   Op::nw,     Op::sw,    Op::bracket, Op::star, Op::vee, Op::wedge};

std::string_view op_name(Op op);
/// Throws FormatError for names outside the vocabulary.
Op parse_op(std::string_view name);

/// Dense n x n x n table; at(i, j, k) is the e_k-coefficient of e_i . e_j.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  /// e_i . e_j as a coefficient vector.
  Vector product(std::size_t i, std::size_t j) const;
  /// x . y for arbitrary coefficient vectors (bilinear contraction).
  Vector product(const Vector& x, const Vector& y) const;

  /// Table of (x, y) -> y . x.
  StructureConstants opposite() const;
  /// Table of (x, y) -> x . y - y . x.
  StructureConstants commutator() const;

  bool is_zero() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

  StructureConstants& operator+=(const StructureConstants& other);
  StructureConstants& operator-=(const StructureConstants& other);

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

StructureConstants operator+(StructureConstants a, const StructureConstants& b);
StructureConstants operator-(StructureConstants a, const StructureConstants& b);
StructureConstants operator-(const StructureConstants& a);

/// A finite-dimensional vector space with named multiplication tables.
/// The class tag is provenance metadata only; it is never trusted.
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::size_t dim, std::optional<std::string> class_tag = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  const std::optional<std::string>& class_tag() const noexcept { return class_tag_; }

  bool has(Op op) const { return ops_.contains(op); }
  /// Throws MissingOperation.
  const StructureConstants& table(Op op) const;
  const std::map<Op, StructureConstants>& tables() const noexcept { return ops_; }

  /// Adds or replaces a table. Throws DimensionError on shape mismatch.
  Algebra& set(Op op, StructureConstants table);
  Algebra& set_class_tag(std::optional<std::string> tag);

  /// Throws MissingOperation naming the first absent op.
  void require(std::initializer_list<Op> ops) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<Op, StructureConstants> ops_;
  std::optional<std::string> class_tag_;
};

/// Convenience for fixtures: entries are 0-based (i, j, k, value).
struct TableEntry {
  std::size_t i, j, k;
  Scalar value;
};
StructureConstants make_table(std::size_t dim, const std::vector<TableEntry>& entries);

}  // namespace ldend

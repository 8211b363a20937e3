#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ldend/scalar.hpp"

namespace ldend {

/// One violated identity at one basis tuple. Indices are 1-based.
struct Failure {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector residual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct CheckReport {
  std::vector<Failure> failures;
  /// Number of (identity, tuple) evaluations performed.
  std::size_t evaluated = 0;

  bool passed() const noexcept { return failures.empty(); }

  /// Appends `other`, keeping lexicographic (indices, position) order.
  void merge(const CheckReport& other);

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace ldend

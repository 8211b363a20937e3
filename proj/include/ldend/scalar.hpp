#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ldend {

/// Exact rational. mpq_class keeps values canonical (reduced, positive
/// denominator) under arithmetic; parse_scalar canonicalizes on input.
using Scalar = mpq_class;

/// Coefficient vector in a fixed basis.
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q" with q != 0. Throws FormatError.
Scalar parse_scalar(std::string_view text);

/// Reduced form: "0", "-3", "5/2".
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }
bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

/// acc += k * v
void axpy(Vector& acc, const Scalar& k, const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& k, const Vector& v);

}  // namespace ldend

#include "ldend/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ldend/error.hpp"

namespace ldend {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_natural_literal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_natural_literal(den))) {
    throw FormatError("", "not a rational literal: \"" + std::string(text) + "\"");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(1);
  if (slash != std::string_view::npos) {
    denominator = mpz_class(std::string(den), 10);
    if (denominator == 0) throw FormatError("", "zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return is_zero(s); });
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

void axpy(Vector& acc, const Scalar& k, const Vector& v) {
  if (acc.size() != v.size()) throw DimensionError("axpy: length mismatch");
  if (is_zero(k)) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) acc[i] += k * v[i];
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out = a;
  axpy(out, Scalar(1), b);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector out = a;
  axpy(out, Scalar(-1), b);
  return out;
}

Vector operator*(const Scalar& k, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

}  // namespace ldend

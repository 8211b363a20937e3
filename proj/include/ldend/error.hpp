#pragma once

#include <stdexcept>
#include <utility>
#include <string>

#include "ldend/report.hpp"

namespace ldend {

/// Base of every error raised by the library. The CLI maps these to exit 2,
/// except PreconditionFailed which is a mathematical failure (exit 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class MissingOperation : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or value. `where` names the offending field.
class FormatError : public Error {
 public:
  FormatError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A constructor refused to build because its hypothesis does not hold.
/// Carries the failing verification report.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(const std::string& what, CheckReport report)
      : Error(what), report_(std::move(report)) {}
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

}  // namespace ldend

#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain (zero where a unit is
/// required, unfactorable rational parts, malformed recurrences, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// A computation would exceed a configured size or time budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent run configuration, e.g. a prime unsuitable for modular mode.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Problem-file validation failure. `path` is a JSON pointer-like location.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace orbitlab

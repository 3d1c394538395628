#pragma once

#include <stdexcept>
#include <string>

namespace riskc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (quantile level outside (0,1], p < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A spec or distribution breaks one of its type invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `path()` locates the offending JSON node or CSV cell.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Harness misuse: an axiom that does not apply to the functional, an
/// empty constraint set, a failed precondition.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Composed dual density went negative: the two input densities cannot come
/// from dual sets of a limited composition.
class InvalidPairError : public Error {
 public:
  using Error::Error;
};

/// Every candidate distribution had zero deviation.
class DegenerateDeviationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace riskc

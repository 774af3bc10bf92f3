#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials live in different ring contexts") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when a Groebner computation exceeds the configured reduction budget.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// Random coefficient draws kept failing their verification. Nothing was
/// certified; the failed verdict names are carried for diagnostics.
class GenericityFailure : public Error {
 public:
  GenericityFailure(std::string what, std::vector<std::string> failures)
      : Error(std::move(what)), failures_(std::move(failures)) {}
  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::vector<std::string> failures_;
};

/// A computable check that the construction relies on did not pass.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class SpecialVerificationFailure : public VerificationFailure {
 public:
  SpecialVerificationFailure(std::string what, std::vector<std::string> subsets)
      : VerificationFailure(std::move(what)), subsets_(std::move(subsets)) {}
  const std::vector<std::string>& failing_subsets() const noexcept { return subsets_; }

 private:
  std::vector<std::string> subsets_;
};

/// Certificate written by an incompatible format version.
class UnsupportedVersion : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Problem-file or certificate parse error with a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lcforge

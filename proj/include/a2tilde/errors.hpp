#pragma once

#include <stdexcept>
#include <string>

namespace a2t {

// Invalid input data or unsupported parameters throw; validation findings
// on well-formed data are returned as reports, not thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plane order outside the supported family (prime q, or the degenerate q=1).
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

// An argument does not belong to the structure it is used with
// (foreign letter, mixed presentations, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A stated precondition of an operation is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration or construction would exceed a configured resource cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Text input that cannot be parsed; carries a 1-based line number.
class FileParseError : public Error {
 public:
  FileParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace a2t

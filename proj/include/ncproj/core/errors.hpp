#pragma once

#include <stdexcept>
#include <string>

namespace ncproj {

/// Base of every error raised by the library. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

/// A requested degree lies above the cutoff of a truncated computation.
class CutoffExceeded : public Error {
 public:
  CutoffExceeded(int needed, int cutoff)
      : Error("cutoff exceeded: degree " + std::to_string(needed) +
              " requested, cutoff is " + std::to_string(cutoff)),
        needed_(needed),
        cutoff_(cutoff) {}
  int needed() const { return needed_; }
  int cutoff() const { return cutoff_; }

 private:
  int needed_;
  int cutoff_;
};

/// Violated precondition or hypothesis of a domain operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncproj

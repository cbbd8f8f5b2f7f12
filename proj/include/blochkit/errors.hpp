#pragma once

#include <stdexcept>
#include <string>

namespace blochkit {

// Base class for all library errors; `tag()` is a stable machine-readable id.
class Error : public std::runtime_error {
 public:
  Error(std::string tag, const std::string& what)
      : std::runtime_error(what), tag_(std::move(tag)) {}
  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

// Input outside the mathematical domain (point outside the disk, bad
// construction parameters, violated precondition).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// Evaluation hit a pole: a denominator fell below 1e-14 in modulus.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error("pole", what) {}
};

// A numeric quantity left the trusted regime (non-finite value, a symbol
// reaching the unit circle, a failed internal consistency check).
class NumericalOverflow : public Error {
 public:
  explicit NumericalOverflow(const std::string& what)
      : Error("numerical_overflow", what) {}
};

// A linear system is singular to working precision (|mu^n - 1| < 1e-12).
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what)
      : Error("singular_matrix", what) {}
};

}  // namespace blochkit

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands drawn from algebras with different atom counts.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// Atom count outside the supported range, or an exhaustive sweep requested
/// on a carrier too large to tabulate.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// A convergence handed to an operation that needs (L1)/(L2) fails them.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace convlab

#ifndef REGULA_ERRORS_HPP
#define REGULA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regula {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic faults: division by zero, zero denominators, non-exact division.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Two non-constant polynomials in different indeterminates were combined.
class VariableMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// 1 - p*c = 0, so the closed loop is undefined.
class SingularLoop : public Error {
 public:
  SingularLoop() : Error("singular loop: 1 - p*c = 0") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace regula

#endif  // REGULA_ERRORS_HPP

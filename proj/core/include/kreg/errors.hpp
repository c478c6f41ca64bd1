#pragma once

#include <stdexcept>
#include <string>

namespace kreg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArityError : Error {
  using Error::Error;
};

// Raised by the polynomial text parser; `position` is a byte offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : Error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

struct BadPrimeError : Error {
  using Error::Error;
};

struct NotPrimeError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct ConversionError : Error {
  using Error::Error;
};

struct UnknownExampleError : Error {
  using Error::Error;
};

struct ZeroPolynomialError : Error {
  using Error::Error;
};

struct InhomogeneousHFError : Error {
  using Error::Error;
};

struct UnsupportedSocleError : Error {
  using Error::Error;
};

struct ConstraintError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  using Error::Error;
};

}  // namespace kreg

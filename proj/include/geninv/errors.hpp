#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geninv {

/// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The ring is infinite (or otherwise unsupported) for the requested operation.
class UnsupportedRing : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A size cap (ring size, matrix dimension, scan size) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A closed-form inverse predicted by a theorem failed verification at a
/// concrete instance. Carries the theorem label so reports can group it.
class TheoremViolation : public Error {
 public:
  TheoremViolation(std::string theorem, const std::string& detail)
      : Error(theorem + ": " + detail), theorem_(std::move(theorem)), detail_(detail) {}

  const std::string& theorem() const noexcept { return theorem_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string theorem_;
  std::string detail_;
};

/// A construction that is proven correct failed its own runtime check.
/// Never caught inside the library.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace geninv

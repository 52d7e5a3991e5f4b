#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcstd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands or polynomials that belong to different coefficient domains or rings.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid domain, ordering or configuration values.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A denominator or a required inverse vanished at the chosen specialization point.
class SpecializationFailure : public Error {
 public:
  using Error::Error;
};

/// The ideal has infinite codimension where a finite one was required.
class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

class ExhaustedRetries : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent overflow (limit 2^15 per variable)") {}
};

class Timeout : public Error {
 public:
  Timeout() : Error("computation exceeded its deadline") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hcstd

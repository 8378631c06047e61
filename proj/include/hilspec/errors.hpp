#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilspec {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct NotSkew : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

// Structural check failure; carries the first offending index pair (1-based).
struct StructureViolation : Error {
  StructureViolation(const std::string& what, std::size_t m, std::size_t n)
      : Error(what), row(m), col(n) {}
  std::size_t row;
  std::size_t col;
};

// Zeros-table problems carry the 1-based line number of the offender.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line_no)
      : Error(what), line(line_no) {}
  std::size_t line;
};

struct NotIncreasing : Error {
  NotIncreasing(const std::string& what, std::size_t line_no)
      : Error(what), line(line_no) {}
  std::size_t line;
};

struct EmptyTable : Error {
  using Error::Error;
};

}  // namespace hilspec

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gapot {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different basis dimensions or layouts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined request: inverting zero, DC through a capacitor, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (CSV, JSON). Carries the 1-based line when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gapot

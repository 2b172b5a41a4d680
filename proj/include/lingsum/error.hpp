#pragma once

#include <stdexcept>
#include <string>

namespace lingsum {

// Base class for all lingsum errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (knowledge-base file, observation csv). Carries a
// 1-based line number when one is known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input that violates a declared invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numeric value outside its admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace lingsum

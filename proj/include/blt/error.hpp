/**
 * @file error.hpp
 * @brief Exception types shared by every blt module.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blt {

/// Invalid input: wrong dimensions, non-prime modulus, malformed object.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search was asked to run beyond its configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text or JSON input that could not be parsed. `line()` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace blt

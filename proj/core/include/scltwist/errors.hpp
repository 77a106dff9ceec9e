#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scltwist {

/// Base of every exception thrown by the library. `code()` is a stable
/// kebab-case identifier ("pattern-mismatch", "out-of-hypotheses", ...) that
/// the command-line reports expose verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message) : Error("invalid-argument", message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error("parse-error", line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  /// 1-based line number, or 0 when the input is not line oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ExpansionNotFound : public Error {
 public:
  explicit ExpansionNotFound(const std::string& message) : Error("expansion-not-found", message) {}
};

class OutOfHypotheses : public Error {
 public:
  explicit OutOfHypotheses(const std::string& message) : Error("out-of-hypotheses", message) {}
};

class ArithmeticOverflow : public Error {
 public:
  explicit ArithmeticOverflow(const std::string& message) : Error("arithmetic-overflow", message) {}
};

}  // namespace scltwist

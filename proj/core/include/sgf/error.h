#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgf {

enum class ErrorCode {
  // Rule DSL front end.
  SyntaxError,
  EmptyImage,
  DuplicateRule,
  UnknownLetterInImage,
  // Preconditions on substitutions and series.
  NotPrimitive,
  NoGrowingSeed,
  InsufficientOccurrences,
  InsufficientData,
  WitnessInvalid,
  DegreeOverflow,
  CountMismatch,
  WrongAlphabetSize,
  TooLarge,
  // Root isolation.
  ZeroPolynomial,
  EndpointIsRoot,
  NoRoot,
  RootPresent,
  NoRootInInterval,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// True for the codes produced while reading rule text.
bool is_parse_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax errors carry a 1-based source location.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, int line, int column, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace sgf

#pragma once

#include <stdexcept>
#include <string>

namespace quiverlab {

enum class ErrorKind {
  NonAdmissible,
  InhomogeneousRelation,
  EndpointMismatch,
  UnknownArrow,
  UnknownVertex,
  MalformedRelator,
  AlgebraMismatch,
  NotASubmodule,
  NotMonomial,
  PathInIdeal,
  FinitePdimArrow,
  FieldMismatch,
  DivisionByZero,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures remember the 1-based line they occurred on.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace quiverlab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rootfam {

enum class ErrorCode {
  DivisionByZero,
  Overflow,
  DomainError,
  ParseError,
  NonIntegerExponent,
  EvaluationError,
  SingularDerivative,
  ZeroResidual,
  DegenerateStep,
  UndefinedParameter,
  UndefinedCOC,
  NotASimpleZero,
  MultiplicityMismatch,
  InsufficientData,
  ValidationError,
  IOError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library; carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error(ErrorCode::ParseError,
              "at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Failure inside jet evaluation; `cause()` is DivisionByZero or DomainError and
/// `subtree()` is the canonical text of the node that failed.
class EvaluationError : public Error {
 public:
  EvaluationError(ErrorCode cause, const std::string& subtree, const std::string& detail)
      : Error(ErrorCode::EvaluationError,
              std::string(to_string(cause)) + " in '" + subtree + "': " + detail),
        cause_(cause),
        subtree_(subtree) {}

  ErrorCode cause() const noexcept { return cause_; }
  const std::string& subtree() const noexcept { return subtree_; }

 private:
  ErrorCode cause_;
  std::string subtree_;
};

}  // namespace rootfam
